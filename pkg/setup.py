#!/usr/bin/env python3
"""
Setup script for dlogmap - discrete logarithm functional graph statistics.
"""

from setuptools import setup

setup()
