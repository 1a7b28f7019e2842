"""
Генерация графа из семейства в текстовом формате.

    python manage.py gen petersen 5 2 -o p52.txt
    python manage.py gen random-regular 16 3 --seed 7
    python manage.py gen ti-dual
"""
from tutte import generators
from tutte.graph_io import write_graph
from tutte.management.options import TutteCommand, usage_error

# Параметры семейств в порядке позиционных аргументов
FAMILY_PARAMS = {
    generators.PETERSEN: (('n', int), ('k', int)),
    generators.COMPLETE: (('n', int),),
    generators.GRID: (('rows', int), ('cols', int)),
    generators.RANDOM_REGULAR: (('n', int), ('d', int)),
    generators.RANDOM_CONNECTED: (('n', int), ('p', float)),
}

CLI_FAMILIES = (
    'petersen', 'complete', 'grid', 'random-regular', 'random-connected',
    'ti', 'ti-dual', 'dodecahedron',
)


def parse_family(family, params, seed=None):
    """FamilySpec по имени семейства и строковым параметрам"""
    family = generators.normalize_family(family)
    expected = FAMILY_PARAMS.get(family, ())
    if len(params) != len(expected):
        names = ' '.join(name for name, _ in expected) or 'без параметров'
        raise usage_error(f'Семейство {family} ожидает параметры: {names}')
    values = {}
    for (name, cast), raw in zip(expected, params):
        try:
            values[name] = cast(raw)
        except ValueError:
            raise usage_error(f'Параметр {name} должен быть числом, получено {raw!r}')
    return generators.FamilySpec(family, seed=seed, **values)


class Command(TutteCommand):
    help = 'Строит граф из семейства и выводит его в текстовом формате'

    def add_arguments(self, parser):
        parser.add_argument('family', choices=CLI_FAMILIES, help='Семейство графов')
        parser.add_argument('params', nargs='*', help='Параметры семейства')
        parser.add_argument('--seed', type=int, help='Зерно для случайных семейств')
        parser.add_argument('-o', '--output', help='Файл для записи графа')

    def run(self, *args, **options):
        spec = parse_family(options['family'], options['params'], options['seed'])
        graph = spec.build()
        if options['output']:
            write_graph(graph, options['output'])
            self.stdout.write(f'{spec.label()}: n={graph.n} m={graph.m} -> {options["output"]}')
        else:
            self.stdout.write(graph.to_text(), ending='')
