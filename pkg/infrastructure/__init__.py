# Infrastructure package initializer.
