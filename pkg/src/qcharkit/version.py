"""Engine version string; part of every cache key."""

ENGINE_VERSION = "0.1.0"
