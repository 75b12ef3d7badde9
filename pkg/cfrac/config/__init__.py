#!/usr/bin/env python
# -*- coding: utf-8 -*-

import os
import yaml

from .config import document
from ..storage import deep_merge
from ..storage import dict_to_storage
from ..exception import ConfigError


ENV_VAR = 'CFRAC_CONFIG'


def load_settings(path=None):
    """
    Build the settings object from the default document, merged with the YAML
    file at ``path`` (or the one named by $CFRAC_CONFIG)
    """
    cfg = yaml.safe_load(document)
    path = path if path is not None else os.environ.get(ENV_VAR, '')
    if path:
        if not(os.path.isfile(path) and os.access(path, os.R_OK)):
            raise ConfigError(f'The config file({path}) does not exist or is unreadable')
        with open(path, encoding='utf-8') as f:
            try:
                override = yaml.safe_load(f) or {}
            except yaml.YAMLError as e:
                raise ConfigError(f'The config file({path}) is not valid YAML: {e}')
        if not isinstance(override, dict):
            raise ConfigError(f'The config file({path}) must hold a mapping')
        cfg = deep_merge(cfg, override)

    settings = dict_to_storage(cfg)
    settings.ENV = path or 'default'
    log_dir = settings.log_cfg.log_dir
    settings.LOGGING_DIR = log_dir if log_dir else ''
    return settings


settings = load_settings()
