"""Ориентированные графы, гиперграфы и каталог фикстур"""
