"""Configuration loader for knotgroups."""
import os
import logging
from typing import Any, Dict, Optional

import yaml

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = "config.yaml"
LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')


class Config:
    """Application configuration."""

    def __init__(self, config_path: Optional[str] = None):
        """Load configuration from YAML file.

        With no explicit path the file named by KNOTGROUPS_CONFIG (default
        config.yaml) is read if it exists; otherwise built-in defaults apply.
        """
        explicit = config_path is not None
        if config_path is None:
            config_path = os.getenv("KNOTGROUPS_CONFIG", DEFAULT_CONFIG_PATH)
        self.config_path = config_path

        raw_config: Dict[str, Any] = {}
        if explicit or os.path.exists(config_path):
            with open(config_path, 'r') as f:
                raw_config = yaml.safe_load(f) or {}
        if not isinstance(raw_config, dict):
            raise ValueError("Configuration root must be a mapping")

        # Logging
        logging_section = raw_config.get('logging', {}) or {}
        self.log_level = str(logging_section.get('level', 'WARNING'))

        # Algebra computations
        algebra = raw_config.get('algebra', {}) or {}
        self.truncate = algebra.get('truncate', 6)
        self.degree_cap = algebra.get('degreeCap', 12)

        # Nilpotent quotients
        nilpotent = raw_config.get('nilpotent', {}) or {}
        self.max_class = nilpotent.get('maxClass', 5)
        self.max_rank = nilpotent.get('maxRank', 3)

        # Fixtures
        fixtures = raw_config.get('fixtures', {}) or {}
        self.default_r = fixtures.get('defaultR', 1)

        # Kishino knot group
        kishino = raw_config.get('kishino', {}) or {}
        self.include_relation_one = kishino.get('includeRelationOne', True)
        self.relation_one = kishino.get('relationOne')

        # Randomized checks
        selftest = raw_config.get('selftest', {}) or {}
        self.seed = selftest.get('seed', 0)
        self.iterations = selftest.get('iterations', 100)

        self._validate()

    def _validate(self):
        """Reject values no computation can use."""
        if self.log_level.upper() not in LOG_LEVELS:
            raise ValueError(f"logging.level must be one of {', '.join(LOG_LEVELS)}")
        for key, value in (('algebra.truncate', self.truncate),
                           ('algebra.degreeCap', self.degree_cap),
                           ('fixtures.defaultR', self.default_r),
                           ('selftest.iterations', self.iterations)):
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise ValueError(f"{key} must be a positive integer")
        if not isinstance(self.max_class, int) or not 1 <= self.max_class <= 5:
            raise ValueError("nilpotent.maxClass must be between 1 and 5")
        if not isinstance(self.max_rank, int) or not 1 <= self.max_rank <= 3:
            raise ValueError("nilpotent.maxRank must be between 1 and 3")
        if not isinstance(self.seed, int) or isinstance(self.seed, bool):
            raise ValueError("selftest.seed must be an integer")
        if self.relation_one is not None and not isinstance(self.relation_one, str):
            raise ValueError("kishino.relationOne must be a word string")

    def save_config(self, config_path: Optional[str] = None):
        """Save configuration back to YAML file."""
        if config_path is None:
            config_path = self.config_path

        config_dict = {
            'logging': {
                'level': self.log_level
            },
            'algebra': {
                'truncate': self.truncate,
                'degreeCap': self.degree_cap
            },
            'nilpotent': {
                'maxClass': self.max_class,
                'maxRank': self.max_rank
            },
            'fixtures': {
                'defaultR': self.default_r
            },
            'kishino': {
                'includeRelationOne': self.include_relation_one,
                'relationOne': self.relation_one
            },
            'selftest': {
                'seed': self.seed,
                'iterations': self.iterations
            }
        }

        with open(config_path, 'w') as f:
            yaml.dump(config_dict, f, default_flow_style=False, sort_keys=False)
        logger.info(f"Configuration written to {config_path}")
