"""
PATH: backend/cli/__init__.py

Shared plumbing for the toolkit's management commands
(output formats, exit codes, error mapping).
"""
