#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
>>> python setup.py sdist
>>> pip install -e .[test]
"""
from setuptools import setup
from setuptools import find_packages


setup(
    name='cfrac',
    version='1.0.0',
    description='Continued-fraction expansions of truncated power series in exact arithmetic',
    license='MIT Licence',

    packages=find_packages(exclude=['tests', 'tests.*']),
    include_package_data=True,
    platforms='any',
    python_requires='>=3.8',
    install_requires=[
        'tornado>=6.0.0',
        'pyyaml',
        'sympy>=1.12',
    ],
    extras_require={
        'fast': ['gmpy2'],
        'test': ['pytest'],
    },
    entry_points={
        'console_scripts': ['cfrac = cfrac.cli:main'],
    },
)
