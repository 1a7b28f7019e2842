"""
Представление неориентированного мультиграфа списками соседей.

Вершины помечены числами 1..n. Для каждой вершины хранится упорядоченный
по возрастанию список соседей, по одному элементу на каждый конец ребра:
кратные ребра повторяются, петля в вершине v дает два элемента v в списке v.
Все операции возвращают новый граф, исходный не изменяется.
"""
import math
from array import array
from collections import deque, namedtuple

from .exceptions import GraphInputError


Edge = namedtuple('Edge', ['u', 'v'])

PULL = 'pull'
PUSH = 'push'
CONTRACTION_MODES = (PULL, PUSH)


class Multigraph:
    """Мультиграф с метками вершин 1..n (структура «список списков»)"""

    __slots__ = ('n', 'm', '_adj', '_key')

    def __init__(self, adj, m=None):
        """
        adj - последовательность списков соседей, adj[i] относится к вершине i+1.
        Списки сортируются; m вычисляется по лемме о рукопожатиях, если не передано.
        """
        self._adj = tuple(tuple(sorted(lst)) for lst in adj)
        self.n = len(self._adj)
        if m is None:
            m = sum(len(lst) for lst in self._adj) // 2
        self.m = m
        self._key = None

    @classmethod
    def _trusted(cls, adj, m):
        """Построение без сортировки: списки уже упорядочены"""
        graph = cls.__new__(cls)
        graph._adj = adj
        graph.n = len(adj)
        graph.m = m
        graph._key = None
        return graph

    @classmethod
    def from_edges(cls, n, edges):
        """
        Построить граф на вершинах 1..n по списку пар (u, v).
        Повторяющиеся пары дают кратные ребра, пара (u, u) - петлю.
        """
        if n < 1:
            raise GraphInputError(f'Число вершин должно быть положительным, получено {n}')
        adj = [[] for _ in range(n)]
        count = 0
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphInputError(
                    f'Ребро ({u}, {v}) содержит метку вне диапазона 1..{n}'
                )
            adj[u - 1].append(v)
            adj[v - 1].append(u)
            count += 1
        return cls(adj, count)

    # ------------------------------------------------------------------
    # Доступ к структуре
    # ------------------------------------------------------------------

    @property
    def adj(self):
        """Списки соседей как список списков (копия)"""
        return [list(lst) for lst in self._adj]

    def neighbors(self, v):
        return self._adj[v - 1]

    def degree(self, v):
        return len(self._adj[v - 1])

    def degrees(self):
        return [len(lst) for lst in self._adj]

    def loop_count(self, v):
        return self._adj[v - 1].count(v) // 2

    def multiplicity(self, u, v):
        """Число копий ребра (u, v)"""
        count = self._adj[u - 1].count(v)
        return count // 2 if u == v else count

    def has_edge(self, u, v):
        if not (1 <= u <= self.n and 1 <= v <= self.n):
            return False
        return self.multiplicity(u, v) >= 1

    def edges(self):
        """Список ребер (u, v), u <= v, с учетом кратности"""
        result = []
        for u, lst in enumerate(self._adj, start=1):
            loops = 0
            for w in lst:
                if w > u:
                    result.append(Edge(u, w))
                elif w == u:
                    loops += 1
            result.extend(Edge(u, u) for _ in range(loops // 2))
        result.sort()
        return result

    def __eq__(self, other):
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self):
        return hash(self._adj)

    def __repr__(self):
        return f'Multigraph(n={self.n}, m={self.m}, adj={self.adj})'

    # ------------------------------------------------------------------
    # Удаление и стягивание
    # ------------------------------------------------------------------

    def _require_edge(self, u, v):
        if not self.has_edge(u, v):
            raise GraphInputError(f'Ребро ({u}, {v}) отсутствует в графе')

    def delete_edge(self, e):
        """G - e: удаляется ровно одна копия ребра"""
        u, v = e
        self._require_edge(u, v)
        adj = list(self._adj)
        if u == v:
            lst = list(adj[u - 1])
            lst.remove(u)
            lst.remove(u)
            adj[u - 1] = tuple(lst)
        else:
            for a, b in ((u, v), (v, u)):
                lst = list(adj[a - 1])
                lst.remove(b)
                adj[a - 1] = tuple(lst)
        return Multigraph._trusted(tuple(adj), self.m - 1)

    def contract_edge(self, e, mode=PULL):
        """
        G / e для ребра e = (u, v), u != v.

        pull: все концы ребер в v переносятся в u, вершина v удаляется;
        push: все концы ребер в u переносятся в v, вершина u удаляется.
        Остальные копии (u, v) становятся петлями. Метки больше удаленной
        вершины уменьшаются на единицу.
        """
        u, v = e
        if mode not in CONTRACTION_MODES:
            raise GraphInputError(f'Неизвестный режим стягивания: {mode}')
        if u == v:
            raise GraphInputError(f'Петлю ({u}, {v}) стягивать нельзя')
        self._require_edge(u, v)
        survivor, gone = (u, v) if mode == PULL else (v, u)

        merged = list(self._adj[survivor - 1])
        merged.remove(gone)
        rest = list(self._adj[gone - 1])
        rest.remove(survivor)
        merged.extend(rest)

        adj = []
        for w, lst in enumerate(self._adj, start=1):
            if w == gone:
                continue
            if w == survivor:
                lst = merged
            elif gone not in lst:
                # монотонная перенумерация сохраняет порядок
                adj.append(tuple(x - 1 if x > gone else x for x in lst))
                continue
            moved = (survivor if x == gone else x for x in lst)
            adj.append(tuple(sorted(x - 1 if x > gone else x for x in moved)))
        return Multigraph._trusted(tuple(adj), self.m - 1)

    def strip_loops(self):
        """Удалить все петли; возвращает (граф, число удаленных петель)"""
        total = 0
        adj = []
        for v, lst in enumerate(self._adj, start=1):
            count = lst.count(v)
            if count:
                total += count // 2
                lst = tuple(x for x in lst if x != v)
            adj.append(lst)
        if not total:
            return self, 0
        return Multigraph._trusted(tuple(adj), self.m - total), total

    def contract_edges(self, edges, mode=PULL):
        """
        Стянуть набор ребер, не образующих циклов (например, все мосты).

        Результат совпадает с последовательным стягиванием: каждая
        компонента стягиваемого леса сливается в одну вершину, которая
        занимает позицию наименьшей (pull) или наибольшей (push) метки.
        """
        if mode not in CONTRACTION_MODES:
            raise GraphInputError(f'Неизвестный режим стягивания: {mode}')
        parent = list(range(self.n + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        count = 0
        for u, v in edges:
            ru, rv = find(u), find(v)
            if ru == rv:
                raise GraphInputError(f'Ребро ({u}, {v}) замыкает цикл среди стягиваемых ребер')
            if (mode == PULL) == (ru < rv):
                parent[rv] = ru
            else:
                parent[ru] = rv
            count += 1
        if not count:
            return self

        survivors = [v for v in range(1, self.n + 1) if find(v) == v]
        label = [0] * (self.n + 1)
        for new, old in enumerate(survivors, start=1):
            label[old] = new
        for v in range(1, self.n + 1):
            label[v] = label[find(v)]

        merged = [[] for _ in survivors]
        for v, lst in enumerate(self._adj, start=1):
            merged[label[v] - 1].extend(label[x] for x in lst)
        # каждое стянутое ребро дает пару «петлевых» концов, их убираем
        for u, v in edges:
            target = merged[label[u] - 1]
            target.remove(label[u])
            target.remove(label[u])
        return Multigraph(merged, self.m - count)

    # ------------------------------------------------------------------
    # Мосты, блоки, связность
    # ------------------------------------------------------------------

    def _incidence(self):
        """
        Нумерация ребер без петель: (списки инцидентности, список ребер).
        k-я копия w в списке u сопоставляется k-й копии u в списке w.
        """
        incidence = [[] for _ in range(self.n + 1)]
        edges = []
        for u, lst in enumerate(self._adj, start=1):
            for w in lst:
                if w > u:
                    eid = len(edges)
                    edges.append(Edge(u, w))
                    incidence[u].append((w, eid))
                    incidence[w].append((u, eid))
        return incidence, edges

    def _lowpoint_search(self):
        """
        Поиск в глубину с нижними связями (Тарьян).
        Возвращает (ребра, номера мостов, компоненты двусвязности как списки номеров ребер).
        """
        incidence, edges = self._incidence()
        n = self.n
        disc = [0] * (n + 1)
        low = [0] * (n + 1)
        timer = 1
        edge_stack = []
        bridge_ids = []
        components = []

        for root in range(1, n + 1):
            if disc[root] or not incidence[root]:
                continue
            disc[root] = low[root] = timer
            timer += 1
            stack = [(root, -1, iter(incidence[root]))]
            while stack:
                u, parent_edge, it = stack[-1]
                descended = False
                for w, eid in it:
                    if eid == parent_edge:
                        continue
                    if not disc[w]:
                        edge_stack.append(eid)
                        disc[w] = low[w] = timer
                        timer += 1
                        stack.append((w, eid, iter(incidence[w])))
                        descended = True
                        break
                    if disc[w] < disc[u]:
                        edge_stack.append(eid)
                        if disc[w] < low[u]:
                            low[u] = disc[w]
                if descended:
                    continue
                stack.pop()
                if not stack:
                    continue
                p = stack[-1][0]
                if low[u] < low[p]:
                    low[p] = low[u]
                if low[u] > disc[p]:
                    bridge_ids.append(parent_edge)
                if low[u] >= disc[p]:
                    component = []
                    while True:
                        eid = edge_stack.pop()
                        component.append(eid)
                        if eid == parent_edge:
                            break
                    components.append(component)
        return edges, bridge_ids, components

    def bridges(self):
        """Множество мостов (разрезающих ребер) в виде Edge(u, v), u < v"""
        edges, bridge_ids, _ = self._lowpoint_search()
        return {edges[eid] for eid in bridge_ids}

    def bridge_list(self):
        """Мосты в порядке возрастания"""
        return sorted(self.bridges())

    def blocks(self):
        """
        Блоки (компоненты двусвязности) связного графа.

        Каждый блок перенумерован в 1..n_i с сохранением относительного
        порядка меток. Мост - отдельный блок на двух вершинах, каждая
        петля - отдельный блок на одной вершине. Блоки упорядочены по
        наименьшей исходной метке.
        """
        if not self.is_connected():
            raise GraphInputError('Разложение на блоки определено только для связного графа')
        edges, _, components = self._lowpoint_search()
        parts = []
        for component in components:
            part = [edges[eid] for eid in component]
            vertices = sorted({x for e in part for x in e})
            parts.append((vertices, part))
        for v in range(1, self.n + 1):
            for _ in range(self.loop_count(v)):
                parts.append(([v], [Edge(v, v)]))
        parts.sort(key=lambda item: (item[0], sorted(item[1])))

        result = []
        for vertices, part in parts:
            position = {old: new for new, old in enumerate(vertices, start=1)}
            result.append(Multigraph.from_edges(
                len(vertices), [(position[a], position[b]) for a, b in part]
            ))
        return result

    def is_connected(self):
        """Граф связен (одна компонента связности)"""
        return len(self.component_of(1)) == self.n

    def component_of(self, start):
        """Множество вершин компоненты, содержащей start"""
        seen = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in self._adj[u - 1]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return seen

    def girth(self):
        """Длина кратчайшего цикла: петля - 1, кратное ребро - 2, лес - бесконечность"""
        best = math.inf
        for v, lst in enumerate(self._adj, start=1):
            if v in lst:
                return 1
            if len(set(lst)) < len(lst):
                best = 2
        if best == 2:
            return 2
        for source in range(1, self.n + 1):
            dist = {source: 0}
            parent = {source: 0}
            queue = deque([source])
            while queue:
                u = queue.popleft()
                if 2 * dist[u] + 1 >= best:
                    break
                for w in self._adj[u - 1]:
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        queue.append(w)
                    elif parent[u] != w:
                        best = min(best, dist[u] + dist[w] + 1)
        return best

    # ------------------------------------------------------------------
    # Перенумерация и сериализация
    # ------------------------------------------------------------------

    def relabel(self, perm):
        """Вершина perm[i] получает метку i + 1"""
        perm = list(perm)
        if sorted(perm) != list(range(1, self.n + 1)):
            raise GraphInputError(f'Последовательность {perm} не является перестановкой 1..{self.n}')
        label = [0] * (self.n + 1)
        for new, old in enumerate(perm, start=1):
            label[old] = new
        adj = [[label[x] for x in self._adj[old - 1]] for old in perm]
        return Multigraph(adj, self.m)

    def encode_key(self):
        """
        Ключ точного кэша: n, степени вершин и упорядоченные списки соседей.
        Равенство ключей равносильно равенству помеченных мультиграфов.
        """
        if self._key is None:
            data = array('I', [self.n])
            data.extend(len(lst) for lst in self._adj)
            for lst in self._adj:
                data.extend(lst)
            self._key = data.tobytes()
        return self._key

    def to_text(self):
        """Текстовый формат: строка "n m", затем по строке "u v" на ребро"""
        lines = [f'{self.n} {self.m}']
        lines.extend(f'{u} {v}' for u, v in self.edges())
        return '\n'.join(lines) + '\n'
