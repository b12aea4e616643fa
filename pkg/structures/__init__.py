"""Орнаментации, переориентации, источники и интривальные гиперграфы"""
