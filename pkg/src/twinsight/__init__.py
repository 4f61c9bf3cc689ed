"""twinsight: topic, sentiment and correlation analytics over short social posts."""

__version__ = "0.1.0"
