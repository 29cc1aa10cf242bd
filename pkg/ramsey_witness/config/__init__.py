import os
import io

import yaml

from ramsey_witness.constants import BUDGET_ENV
from ramsey_witness.exceptions import ValidationError
from ramsey_witness.config.constants import DEFAULT_RW_CONFIG


class RwConfig(object):
    def __init__(self, content=None, budget=None, environ=None):
        """
        :param content: path to a user YAML file merged over the defaults.
        :param budget: explicit budget, wins over file and environment.
        :param environ: mapping used instead of os.environ.
        """
        environ = os.environ if environ is None else environ
        if content:
            self._values = update_dict_values(DEFAULT_RW_CONFIG, content)
        else:
            self._values = yaml.safe_load(DEFAULT_RW_CONFIG)
        if environ.get(BUDGET_ENV):
            self._values['budget'] = environ[BUDGET_ENV]
        if budget is not None:
            self._values['budget'] = budget
        self.validate()

    @property
    def budget(self):
        return self._values['budget']

    @property
    def workers(self):
        return self._values['workers']

    @property
    def dot(self):
        return dict(self._values.get('dot') or {})

    def validate(self):
        for key in ['budget', 'workers']:
            try:
                self._values[key] = int(self._values[key])
            except (TypeError, ValueError):
                raise ValidationError(
                    'invalid config: {} must be an integer, got {!r}'.format(
                        key, self._values[key]))
            if self._values[key] < 1:
                raise ValidationError(
                    'invalid config: {} must be positive'.format(key))


def update_dict_values(default_dict, name_file_config):
    with io.open(name_file_config, 'r') as f:
        user_dict = f.read()

    default_dict = yaml.safe_load(default_dict)
    user_dict = yaml.safe_load(user_dict)
    if user_dict is not None and not isinstance(user_dict, dict):
        raise ValidationError(
            'invalid config: {} is not a mapping'.format(name_file_config))
    return update_dict_values_recursive(default_dict, user_dict)


def update_dict_values_recursive(default_dict, user_dict):
    default_dict = default_dict or {}
    for key, value in (user_dict or {}).items():
        if isinstance(value, dict):
            default_dict[key] = update_dict_values_recursive(
                default_dict.get(key), value)
        elif value is not None:
            default_dict[key] = value
    return default_dict
