"""Отчёты о проверках"""
