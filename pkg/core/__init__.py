"""
Core - Funcionalidades centrais do toolkit Katsura
Módulo principal com configurações, modelos e serviços
"""
