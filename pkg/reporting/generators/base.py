"""
Base Report Generator

Abstract base class for all report generators.
"""

from abc import ABC, abstractmethod
from typing import Any, Dict, Optional

from core.config import Config, get_config
from entropy.models import EntropyValue


class BaseReportGenerator(ABC):
    """
    Abstract base class for report generators.

    All report generators must implement generate() and get_title().
    """

    def __init__(self, config: Optional[Config] = None):
        """
        Initialize the report generator.

        Args:
            config: Configuration to read tolerances and output settings from
                (the global configuration when None)
        """
        self.config = config if config is not None else get_config()

    @abstractmethod
    def generate(self, parameters: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
        """
        Generate the report.

        Args:
            parameters: Report parameters

        Returns:
            Dict containing report data

        Raises:
            ValueError: If the parameters do not describe a valid input
        """
        pass

    @abstractmethod
    def get_title(self, parameters: Optional[Dict[str, Any]] = None) -> str:
        """
        Get report title.

        Args:
            parameters: Report parameters

        Returns:
            Report title string
        """
        pass

    @property
    def entropy_unit(self) -> str:
        return self.config.output.log_base

    def _entropy(self, value: EntropyValue) -> float:
        """Entropy in the configured unit (nats or bits)."""
        return value.in_base(self.config.output.log_base)

    def _require(self, parameters: Optional[Dict[str, Any]], key: str) -> Any:
        if not parameters or key not in parameters:
            raise ValueError(f"{type(self).__name__} requires the '{key}' parameter")
        return parameters[key]
