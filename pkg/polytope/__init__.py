"""Гиперграфические многогранники в точной арифметике"""
