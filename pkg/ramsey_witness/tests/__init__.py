import os
import json

from click.testing import CliRunner

from ramsey_witness.main import rw

RESOURCES = os.path.join(
    os.path.dirname(os.path.dirname(__file__)),
    'bipartite', 'tests', 'resources')


def resource_path(name):
    return os.path.join(RESOURCES, name)


def write_document(directory, name, text):
    path = directory / name
    path.write_text(text, encoding='utf-8')
    return str(path)


def invoke(args):
    return CliRunner().invoke(rw, [str(a) for a in args])


def invoke_json(args):
    result = invoke(['-f', 'json'] + list(args))
    return result, json.loads(result.output) if result.output else None
