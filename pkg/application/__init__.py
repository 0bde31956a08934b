# Application layer package.
