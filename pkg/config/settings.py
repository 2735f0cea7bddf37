"""
Configuration settings for ontocomp.

This module contains the configuration class that centralizes all configurable
parameters and supports environment variable overrides.
"""

import os
from dataclasses import dataclass


def _env_flag(name: str, default: bool) -> bool:
    value = os.getenv(name)
    if value is None:
        return default
    return value.strip().lower() in {"1", "true", "yes", "on"}


@dataclass
class OntoCompConfig:
    """Configuration class for reasoning and analysis settings."""

    # Reasoner settings
    node_budget: int = 100000  # Tableau nodes per query before giving up
    oracle_max_atoms: int = 20  # Truth-table oracle is exponential in this

    # Language settings
    strict_profile: bool = False  # Reject bottom/only in characterizations

    # Meaning engine settings
    workers: int = 4  # Max concurrent per-OID EBMS computations
    report_mode: bool = False  # Keep non-reverse-translatable entailments

    # Export settings
    iri_base: str = "http://example.org/ontocomp"

    # Output
    verbose: bool = False  # Status lines on stderr

    def __post_init__(self):
        if self.node_budget < 1:
            raise ValueError(f"node_budget must be positive, got {self.node_budget}")
        if not 0 <= self.oracle_max_atoms <= 20:
            raise ValueError(f"oracle_max_atoms must be within 0..20, got {self.oracle_max_atoms}")
        if self.workers < 1:
            raise ValueError(f"workers must be positive, got {self.workers}")

    @classmethod
    def from_env(cls) -> 'OntoCompConfig':
        """Load configuration from environment variables."""
        return cls(
            node_budget=int(os.getenv('ONTOCOMP_NODE_BUDGET', 100000)),
            oracle_max_atoms=int(os.getenv('ONTOCOMP_ORACLE_MAX_ATOMS', 20)),
            strict_profile=_env_flag('ONTOCOMP_STRICT', False),
            workers=int(os.getenv('ONTOCOMP_WORKERS', 4)),
            report_mode=_env_flag('ONTOCOMP_REPORT_MODE', False),
            iri_base=os.getenv('ONTOCOMP_IRI_BASE', "http://example.org/ontocomp"),
            verbose=_env_flag('ONTOCOMP_VERBOSE', False),
        )


# Default configuration instance
DEFAULT_CONFIG = OntoCompConfig()
