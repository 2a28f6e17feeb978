#!/usr/bin/env python
#
# setup.py -- Installation for ridgekit.
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

import sys

from setuptools import setup, find_packages

from ridgekit import get_package_version


# Make sure this is a version of Python we are compatible with. This should
# prevent people on older versions from unintentionally trying to install
# the source tarball, and failing.
if sys.hexversion < 0x03080000:
    sys.stderr.write(
        'ridgekit %s is incompatible with your version of Python.\n'
        'Please use Python 3.8 or newer.\n' % get_package_version())
    sys.exit(1)


ridgekit_commands = [
    'audit-spaces = ridgekit.commands.audit_spaces:AuditSpaces',
    'eval = ridgekit.commands.evaluate:Eval',
    'fourier-check = ridgekit.commands.fourier_check:FourierCheck',
    'plan = ridgekit.commands.plan:Plan',
    'rate = ridgekit.commands.rate:Rate',
    'recon = ridgekit.commands.recon:Recon',
    'sample = ridgekit.commands.sample:Sample',
]


PACKAGE_NAME = 'ridgekit'

with open('README.md') as fp:
    long_description = fp.read()


setup(
    name=PACKAGE_NAME,
    version=get_package_version(),
    license='MIT',
    description=(
        'Ridgelet transforms and randomized shallow networks with '
        'dimension-independent approximation rates'
    ),
    long_description=long_description,
    long_description_content_type='text/markdown',
    entry_points={
        'console_scripts': [
            'ridgekit = ridgekit.commands.main:main',
        ],
        'ridgekit_commands': ridgekit_commands,
    },
    install_requires=[
        'colorama',
        'numpy>=1.20',
        'scipy>=1.6',
        'texttable',
        'tqdm',
    ],
    packages=find_packages(exclude=['tests']),
    include_package_data=True,
    python_requires='>=3.8',
    classifiers=[
        'Development Status :: 4 - Beta',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Natural Language :: English',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
