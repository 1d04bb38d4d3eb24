# Shared helpers for zgamma apps
