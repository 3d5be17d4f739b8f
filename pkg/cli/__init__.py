"""
Interface de linha de comando do toolkit Katsura
"""
