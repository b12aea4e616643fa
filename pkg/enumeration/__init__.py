"""Перечисление мётел и гребёнок, ряды и биекции"""
