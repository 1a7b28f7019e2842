"""
Приложение tutte: вычисление полинома Татта мультиграфа
методом удаления-стягивания ребер.
"""
