"""Наборы проверок теорем"""
