"""Test package for hyperwave"""
