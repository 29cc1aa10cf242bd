import os
import re
import pathlib
from setuptools import (setup, find_packages)


def get_version():
    current_dir = pathlib.Path(__file__).parent.resolve()
    version_file = os.path.join(current_dir, 'ramsey_witness/__version__.py')
    with open(version_file, 'r') as outfile:
        var = outfile.read()
        return re.search(r'\d+.\d+.\d+', var).group()


install_requires = [
    'click>8,<9',
    'pyyaml>=6.0.1',
    'networkx>=3.2.1',
    'pydot>=2.0.0'
]


setup(
    name='ramsey-witness',
    version=get_version(),
    license='LICENSE',
    packages=find_packages(),
    description='Witness finder and checker for induced bipartite Ramsey '
                'statements',
    entry_points={"console_scripts": ["rw = ramsey_witness.main:main"]},
    package_data={
        'ramsey_witness': ['bipartite/tests/resources/*.txt']
    },
    install_requires=install_requires
)
