#
# Copyright (c) 2026, the arrcoh authors.
# All rights reserved.
# Licensed under the BSD 3-Clause license.
# For full license text, see LICENSE.txt file in the repo root  or https://opensource.org/licenses/BSD-3-Clause
#

from setuptools import setup, find_packages

version = '0.1'

with open("README.rst", 'r') as fin:
    README = fin.read()


setup(name='arrcoh',
      version=version,
      description="Exact cohomology rings of abelian arrangements",
      long_description=README,
      long_description_content_type="text/x-rst",
      classifiers=[
          "Development Status :: 3 - Alpha",
          "Programming Language :: Python :: 3.9",
          "License :: OSI Approved :: BSD License",
          "Intended Audience :: Science/Research",
          "Topic :: Scientific/Engineering :: Mathematics",
      ],  # Get strings from http://pypi.python.org/pypi?%3Aaction=list_classifiers
      keywords='arrangements cohomology matroids toric',
      author='the arrcoh authors',
      license="BSD-3-Clause",
      packages=find_packages(exclude=['ez_setup', 'tests']),
      include_package_data=True,
      zip_safe=True,
      install_requires=[
          "six>=1.12.0",
          "sympy>=1.14",
      ],
      tests_require=[
          "mock",
      ],
      entry_points="""
      # -*- Entry points: -*-
      [console_scripts]
      arrcoh = arrcoh.cli:main
      """,
      )
