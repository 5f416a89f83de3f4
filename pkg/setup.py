# Copyright 2026 The polydisc-bounds Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import os

import setuptools


PACKAGE_ROOT = os.path.abspath(os.path.dirname(__file__))

with open(os.path.join(PACKAGE_ROOT, 'README.rst')) as file_obj:
    README = file_obj.read()


REQUIREMENTS = [
    'google-crc32c >= 1.0, < 2.0dev',
    'mpmath >= 1.2.0, < 2.0dev',
    'numpy >= 1.22.0, < 3.0dev',
]
EXTRAS_REQUIRE = {
    'test': [
        'hypothesis >= 6.0.0',
        'pytest',
    ],
}

setuptools.setup(
    name='polydisc-bounds',
    version = "0.1.0",
    description='Sidon constant and Bohr radius bounds for polynomials on the polydisc',
    author='The polydisc-bounds Authors',
    long_description=README,
    scripts=[],
    packages=setuptools.find_packages(
        exclude=("tests*", "docs*")
    ),
    entry_points={
        'console_scripts': ['polydisc = polydisc.cli:main'],
    },
    license='Apache 2.0',
    platforms='Posix; MacOS X; Windows',
    include_package_data=True,
    zip_safe=False,
    install_requires=REQUIREMENTS,
    extras_require=EXTRAS_REQUIRE,
    python_requires='>= 3.9',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: 3.12',
        'Programming Language :: Python :: 3.13',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
