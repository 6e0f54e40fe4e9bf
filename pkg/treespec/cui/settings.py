# Copyright (C) 2024 treespec developers
# All rights reserved.
#
# This file is part of treespec. Distributed under the BSD 3-clause
# license; see LICENSE at the top of the source tree.

import os
import sys
from treespec.graph.trees import (DEFAULT_ENUMERATION_LIMIT,
                                  DEFAULT_CENSUS_LIMIT)
from treespec.dsverify.spectrum import CACHE_DIR_ENV

output_formats = ('json', 'tsv', 'yaml', 'graph6', 'edgelist')


class Settings(object):
    def __init__(self):
        self._cache_dir = None
        self._census_max_n = DEFAULT_CENSUS_LIMIT
        self._enumeration_limit = DEFAULT_ENUMERATION_LIMIT
        self._format = None
        self._log_level = 1
        self._max_sum = None
        self._repair = False
        self._sample_fraction = 0.01
        self._seed = 0
        self._workers = 1

    def set_cache_dir(self, cache_dir):
        self._cache_dir = cache_dir

    def get_cache_dir(self):
        return self._cache_dir

    def set_census_max_n(self, census_max_n):
        self._census_max_n = census_max_n

    def get_census_max_n(self):
        return self._census_max_n

    def set_enumeration_limit(self, enumeration_limit):
        self._enumeration_limit = enumeration_limit

    def get_enumeration_limit(self):
        return self._enumeration_limit

    def set_format(self, fmt):
        self._format = fmt

    def get_format(self):
        return self._format

    def set_log_level(self, log_level):
        self._log_level = log_level

    def get_log_level(self):
        return self._log_level

    def set_max_sum(self, max_sum):
        self._max_sum = max_sum

    def get_max_sum(self):
        return self._max_sum

    def set_repair(self, repair):
        self._repair = repair

    def get_repair(self):
        return self._repair

    def set_sample_fraction(self, sample_fraction):
        self._sample_fraction = sample_fraction

    def get_sample_fraction(self):
        return self._sample_fraction

    def set_seed(self, seed):
        self._seed = seed

    def get_seed(self):
        return self._seed

    def set_workers(self, workers):
        self._workers = workers

    def get_workers(self):
        return self._workers

    def get_config_dict(self):
        """Merged configuration as echoed into reports"""
        return {'cache_dir': self._cache_dir,
                'census_max_n': self._census_max_n,
                'enumeration_limit': self._enumeration_limit,
                'format': self._format,
                'log_level': self._log_level,
                'max_sum': self._max_sum,
                'repair': self._repair,
                'sample_fraction': self._sample_fraction,
                'seed': self._seed,
                'workers': self._workers}


class ConfParser(object):
    """KEY = value configuration merged with command-line options

    Order of precedence: built-in defaults, the configuration file,
    $TREESPEC_CACHE_DIR (for CACHE_DIR only), command-line options.

    """

    def __init__(self, filename=None, args=None):
        self._settings = Settings()
        confs = {}
        if filename is not None:
            self._confs = {}
            self._parameters = {}
            self._filename = filename
            self.read_file()
            self.parse_conf()
            self.set_settings()
            confs.update(self._confs)
        if (CACHE_DIR_ENV in os.environ and 'cache_dir' not in confs):
            self._settings.set_cache_dir(os.environ[CACHE_DIR_ENV])
        if args is not None:
            self._confs = {}
            self._parameters = {}
            self._args = args
            self.read_options()
            self.parse_conf()
            self.set_settings()
            confs.update(self._confs)
        self._confs = confs

    def get_configures(self):
        return self._confs

    def get_settings(self):
        return self._settings

    def setting_error(self, message):
        print(message)
        print("Please check the setting tags and options.")
        sys.exit(1)

    def read_file(self):
        if not os.path.exists(self._filename):
            self.setting_error("Configuration file %s not found."
                               % self._filename)
        is_continue = False
        left = None
        with open(self._filename) as f:
            for line in f:
                if line.strip() == '':
                    is_continue = False
                    continue

                if line.strip()[0] == '#':
                    is_continue = False
                    continue

                if is_continue and left is not None:
                    self._confs[left] += line.strip()
                    self._confs[left] = self._confs[left].replace('+++', ' ')
                    is_continue = False

                if line.find('=') != -1:
                    left, right = [x.strip() for x in line.split('=', 1)]
                    left = left.lower()
                    self._confs[left] = right

                if line.find('+++') != -1:
                    is_continue = True

    def read_options(self):
        arg_list = vars(self._args)
        if 'cache_dir' in arg_list:
            if self._args.cache_dir is not None:
                self._confs['cache_dir'] = self._args.cache_dir

        if 'census_max_n' in arg_list:
            if self._args.census_max_n is not None:
                self._confs['census_max_n'] = self._args.census_max_n

        if 'enumeration_limit' in arg_list:
            if self._args.enumeration_limit is not None:
                self._confs['enumeration_limit'] = \
                    self._args.enumeration_limit

        if 'output_format' in arg_list:
            if self._args.output_format is not None:
                self._confs['format'] = self._args.output_format

        if 'log_level' in arg_list:
            if self._args.log_level is not None:
                self._confs['log_level'] = self._args.log_level

        if 'max_sum' in arg_list:
            if self._args.max_sum is not None:
                self._confs['max_sum'] = self._args.max_sum

        if 'repair' in arg_list:
            if self._args.repair:
                self._confs['repair'] = '.true.'

        if 'sample_fraction' in arg_list:
            if self._args.sample_fraction is not None:
                self._confs['sample_fraction'] = self._args.sample_fraction

        if 'seed' in arg_list:
            if self._args.seed is not None:
                self._confs['seed'] = self._args.seed

        if 'workers' in arg_list:
            if self._args.workers is not None:
                self._confs['workers'] = self._args.workers

    def _parse_int(self, key, minimum=None):
        try:
            value = int(self._confs[key])
        except ValueError:
            self.setting_error("%s has to be an integer."
                               % key.upper())
        if minimum is not None and value < minimum:
            self.setting_error("%s has to be at least %d."
                               % (key.upper(), minimum))
        return value

    def parse_conf(self):
        confs = self._confs

        for conf_key in confs.keys():
            if conf_key == 'cache_dir':
                self.set_parameter('cache_dir', confs['cache_dir'])

            elif conf_key == 'census_max_n':
                self.set_parameter('census_max_n',
                                   self._parse_int('census_max_n', 1))

            elif conf_key == 'enumeration_limit':
                self.set_parameter('enumeration_limit',
                                   self._parse_int('enumeration_limit', 1))

            elif conf_key == 'format':
                fmt = ("%s" % confs['format']).lower()
                if fmt not in output_formats:
                    self.setting_error("FORMAT has to be one of %s."
                                       % ", ".join(output_formats))
                self.set_parameter('format', fmt)

            elif conf_key == 'log_level':
                self.set_parameter('log_level',
                                   self._parse_int('log_level', 0))

            elif conf_key == 'max_sum':
                self.set_parameter('max_sum', self._parse_int('max_sum', 3))

            elif conf_key == 'repair':
                value = ("%s" % confs['repair']).lower()
                if value not in ('.true.', '.false.'):
                    self.setting_error("REPAIR has to be .true. or .false.")
                self.set_parameter('repair', value == '.true.')

            elif conf_key == 'sample_fraction':
                try:
                    fraction = float(confs['sample_fraction'])
                except ValueError:
                    self.setting_error("SAMPLE_FRACTION has to be a number.")
                if not 0 < fraction <= 1:
                    self.setting_error("SAMPLE_FRACTION has to be in "
                                       "(0, 1].")
                self.set_parameter('sample_fraction', fraction)

            elif conf_key == 'seed':
                self.set_parameter('seed', self._parse_int('seed', 0))

            elif conf_key == 'workers':
                self.set_parameter('workers', self._parse_int('workers', 1))

            else:
                self.setting_error("Unknown setting tag %s."
                                   % conf_key.upper())

    def set_parameter(self, key, val):
        self._parameters[key] = val

    def set_settings(self):
        params = self._parameters

        if 'cache_dir' in params:
            self._settings.set_cache_dir(params['cache_dir'])

        if 'census_max_n' in params:
            self._settings.set_census_max_n(params['census_max_n'])

        if 'enumeration_limit' in params:
            self._settings.set_enumeration_limit(params['enumeration_limit'])

        if 'format' in params:
            self._settings.set_format(params['format'])

        if 'log_level' in params:
            self._settings.set_log_level(params['log_level'])

        if 'max_sum' in params:
            self._settings.set_max_sum(params['max_sum'])

        if 'repair' in params:
            self._settings.set_repair(params['repair'])

        if 'sample_fraction' in params:
            self._settings.set_sample_fraction(params['sample_fraction'])

        if 'seed' in params:
            self._settings.set_seed(params['seed'])

        if 'workers' in params:
            self._settings.set_workers(params['workers'])
