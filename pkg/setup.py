from setuptools import setup, find_packages

setup(name='linkforge',
      version='0.1',
      description='Coloring, skein and Burnside group invariants that '
                  'obstruct local moves on link diagrams',
      author='Linkforge authors',
      packages=find_packages(exclude=['test', 'test.*']),
      python_requires='>=3.5',
      install_requires=['numpy>=1.13', 'sympy>=1.1'],
      entry_points={
          'console_scripts': ['linkforge=linkforge.cli:main'],
      },
      )
