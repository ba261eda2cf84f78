import setuptools


AUTHORS = [
    'Poset Realizer Developers',
]

with open('requirements.txt', 'r') as f:
    requirements = f.read().splitlines()

with open("README.md", "r") as fh:
    long_description = fh.read()

setuptools.setup(
      name='poset_realizer',
      version='0.1.0',
      description='Finite posets with prescribed automorphism groups: constructions, certificates and exhaustive '
                  'searches for minimum realizers.',
      packages=setuptools.find_packages(exclude=['tests', 'tests.*']),
      package_data={'poset_realizer.beta_search': ['data/*.json']},
      install_requires=requirements,
      python_requires='>=3.8',
      entry_points={'console_scripts': ['poset-realizer=poset_realizer.cli:main']},
      author=', '.join(sorted(AUTHORS, key=lambda n: n.split()[-1].lower())),
      long_description=long_description,
      long_description_content_type="text/markdown",
      )
