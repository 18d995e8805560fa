from setuptools import setup, find_packages

test_deps = ["pytest"]
extras = {'test': test_deps}

setup(
    name='perm_pattern',
    use_scm_version=True,
    packages=find_packages(),
    license='LGPLv3',
    description="Permutation pattern matching and Clique reduction toolkit",
    long_description=open('README.rst').read(),
    install_requires=['footil>=0.24.0', 'networkx'],
    tests_require=test_deps,
    extras_require=extras,
    setup_requires=[
        'setuptools_scm',
    ],
    scripts=['bin/perm-pattern'],
    python_requires='>=3.8',
    classifiers=[
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: 3.12',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
