# Domain package initializer.
