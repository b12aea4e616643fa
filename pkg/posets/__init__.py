"""Конечные частично упорядоченные множества и решётки"""
