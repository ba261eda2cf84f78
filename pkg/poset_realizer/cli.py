"""
Command line interface of poset-realizer.

Every subcommand prints a JSON object to stdout. Errors are printed as JSON error objects and lead to the exit
status 2. The exit status 1 marks a negative or unverified verdict.
"""
import argparse
import json
import logging
import sys
import warnings
from dataclasses import dataclass, field

from .automorphisms import automorphism_group, brute_force_automorphism_count, recheck_certificate
from .beta_search import KnownBounds, beta
from .constructions import adjacency_audit, graph_realizer_lattice
from .core import Construction, ConfigurationError, PosetRealizerError
from .groups import group_from_spec
from .posets import RandomPosetGenerator, face_poset, graph_from_dict, load_poset, poset_to_dict, read_json, to_dot
from .posets import write_json
from .settings import get_settings
from .utils import make_module, registered_keys, split_top_level

logger = logging.getLogger(__name__)

COMMANDS = ('construct', 'aut', 'verify', 'beta', 'face-poset', 'bounds', 'crosscheck')

# construction flags and the methods that accept them
_METHOD_FLAGS = dict(
    gens=('main',),
    n=('crown', 'subdivided-crown'),
    p=('cyclic-pk',),
    k=('cyclic-pk',),
    unverified=('cyclic-pk',),
    parts=('abelian-join',),
    graph=('graph-lattice',),
)


@dataclass
class RunConfig:
    """Validated configuration of a single command line run."""
    command: str
    group: str = None
    method: str = None
    gens: str = None
    n: int = None
    p: int = None
    k: int = None
    parts: str = None
    graph: str = None
    unverified: bool = False
    verify: bool = True
    bounded: bool = False
    poset: str = None
    certificate: str = None
    fix: list = field(default_factory=list)
    max_points: int = None
    count: int = None
    seed: int = None
    workers: int = None
    timeout: float = None
    out: str = None
    action_out: str = None
    certificate_out: str = None
    dot: str = None

    @classmethod
    def from_namespace(cls, namespace):
        known = set(cls.__dataclass_fields__)
        config = cls(**{key: value for key, value in vars(namespace).items() if key in known})
        config.validate()
        return config

    def validate(self):
        """
        Exceptions:
            ConfigurationError: A required flag is missing or flags conflict.
        """
        if self.command not in COMMANDS:
            raise ConfigurationError(f'Unknown command "{self.command}".')
        if self.workers is not None and self.workers < 1:
            raise ConfigurationError('--workers has to be positive.')
        if self.timeout is not None and self.timeout <= 0:
            raise ConfigurationError('--timeout has to be positive.')
        if self.command == 'construct':
            if self.method not in registered_keys(Construction):
                raise ConfigurationError(
                    f'Unknown method "{self.method}". Available: {", ".join(registered_keys(Construction))}.'
                )
            for flag, methods in _METHOD_FLAGS.items():
                value = getattr(self, flag)
                if value not in (None, False) and self.method not in methods:
                    raise ConfigurationError(f'--{flag} cannot be used with the method "{self.method}".')
            if self.method == 'main' and self.group is None:
                raise ConfigurationError('The method "main" needs --group.')
            if self.method != 'main' and self.group is not None:
                raise ConfigurationError(f'The method "{self.method}" determines its group, --group is not allowed.')
            if self.method == 'cyclic-pk' and (self.p is None or self.k is None):
                raise ConfigurationError('The method "cyclic-pk" needs --p and --k.')
            if self.method == 'abelian-join' and not self.parts:
                raise ConfigurationError('The method "abelian-join" needs --parts.')
            if self.method == 'graph-lattice' and self.graph is None:
                raise ConfigurationError('The method "graph-lattice" needs --graph.')
        elif self.command == 'beta' and (self.group is None or self.max_points is None):
            raise ConfigurationError('The command "beta" needs --group and --max-points.')

    def construction_params(self):
        if self.method == 'main':
            return dict(group=group_from_spec(self.group), generators=split_top_level(self.gens) if self.gens else None)
        if self.method in ('crown', 'subdivided-crown'):
            return dict(n=3 if self.n is None else self.n)
        if self.method == 'cyclic-pk':
            return dict(p=self.p, k=self.k, unverified=self.unverified)
        if self.method == 'abelian-join':
            try:
                return dict(parts=[int(part) for part in split_top_level(self.parts)])
            except ValueError:
                raise ConfigurationError(f'--parts has to be a comma separated list of integers, got "{self.parts}".')
        return dict(graph=graph_from_dict(read_json(self.graph)))


def _emit(data):
    print(json.dumps(data, indent=1))


def _parse_label(text):
    try:
        return json.loads(text)
    except ValueError:
        return text


def _construct(config):
    construction = make_module(Construction, config.method, **config.construction_params())
    realization = construction.build()
    settings = get_settings(workers=config.workers, timeout=config.timeout)
    certificate = realization.certificate(
        require_free=config.method == 'main', verify=config.verify, workers=settings['workers'],
        timeout=settings['timeout']
    )
    passed = certificate.verdict
    if config.method == 'main':
        certificate.audit = adjacency_audit(realization)
        passed = passed and certificate.audit['passed']
    if realization.params.get('unverified'):
        warnings.warn(f'The subdivided crown regime is not established for p = {config.p}.', Warning)
    if not config.verify:
        warnings.warn('The automorphism group was not computed, the certificate is unverified.', Warning)
    if config.out:
        write_json(poset_to_dict(realization.poset), config.out)
    if config.action_out:
        write_json(realization.action_to_dict(), config.action_out)
    if config.certificate_out:
        write_json(certificate.to_dict(), config.certificate_out)
    if config.dot:
        with open(config.dot, 'w') as f:
            f.write(to_dot(realization.poset, name=config.method))
    _emit(certificate.to_dict(embed=False))
    return 0 if passed else 1


def _aut(config):
    if config.poset is None:
        raise ConfigurationError('The command "aut" needs --poset.')
    poset = load_poset(config.poset)
    group = automorphism_group(
        poset, fixing=[_parse_label(label) for label in config.fix], workers=config.workers, timeout=config.timeout
    )
    _emit(group.to_dict(labels=poset.points))
    return 0


def _verify(config):
    if config.certificate is None:
        raise ConfigurationError('The command "verify" needs --certificate.')
    certificate, agrees = recheck_certificate(read_json(config.certificate), workers=config.workers,
                                              timeout=config.timeout)
    _emit(dict(certificate.to_dict(embed=False), agrees=agrees))
    return 0 if certificate.verdict and agrees else 1


def _beta(config):
    result = beta(group_from_spec(config.group), config.max_points, workers=config.workers)
    report = result.to_dict()
    if config.out:
        write_json(report, config.out)
    _emit(report)
    return 0


def _face_poset(config):
    if config.graph is None:
        raise ConfigurationError('The command "face-poset" needs --graph.')
    graph = graph_from_dict(read_json(config.graph))
    poset = graph_realizer_lattice(graph) if config.bounded else face_poset(graph)
    if config.out:
        write_json(poset_to_dict(poset), config.out)
    if config.dot:
        with open(config.dot, 'w') as f:
            f.write(to_dot(poset, name='face_poset'))
    _emit(poset_to_dict(poset))
    return 0


def _bounds(config):
    bounds = KnownBounds.load()
    bounds.check()
    _emit(dict(groups=bounds.comparison_table(), sources=bounds.sources))
    return 0


def _crosscheck(config):
    settings = get_settings(seed=config.seed)
    generator = RandomPosetGenerator(max_points=config.max_points or 8, seed=settings['seed'])
    corpus = generator.corpus(config.count or 500)
    mismatches = []
    for index, poset in enumerate(corpus):
        engine = automorphism_group(poset, workers=1, timeout=config.timeout).order
        reference = brute_force_automorphism_count(poset)
        if engine != reference:
            mismatches.append(dict(index=index, engine=engine, brute_force=reference, poset=poset_to_dict(poset)))
    logger.info('%d posets cross-checked, %d mismatches.', len(corpus), len(mismatches))
    _emit(dict(seed=settings['seed'], count=len(corpus), mismatches=mismatches))
    return 0 if not mismatches else 1


_handlers = {
    'construct': _construct,
    'aut': _aut,
    'verify': _verify,
    'beta': _beta,
    'face-poset': _face_poset,
    'bounds': _bounds,
    'crosscheck': _crosscheck,
}


def run(config):
    """
    Executes a validated run configuration.

    Returns:
        int: 0 iff all verdicts of the run are positive, 1 otherwise.
    """
    return _handlers[config.command](config)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--workers', type=int, default=None, help='Number of worker processes.')
    common.add_argument('--timeout', type=float, default=None, help='Timeout of the automorphism search in seconds.')
    common.add_argument('--seed', type=int, default=None, help='Seed of the random corpora.')
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument('-v', '--verbose', action='store_true', help='Log progress information.')
    verbosity.add_argument('-q', '--quiet', action='store_true', help='Log errors only.')

    parser = argparse.ArgumentParser(
        prog='poset-realizer', description='Finite posets with prescribed automorphism groups.'
    )
    subparsers = parser.add_subparsers(dest='command', required=True)

    construct = subparsers.add_parser('construct', parents=[common], help='Build and certify a realizer.')
    construct.add_argument('--method', required=True, help='Construction tag.')
    construct.add_argument('--group', help='Group descriptor, e.g. C2^3, S4 or file:table.json.')
    construct.add_argument('--gens', help='Comma separated generating sequence, e.g. e1,e2,e3 or (12),(23),(34).')
    construct.add_argument('--n', type=int, help='Size parameter of the crowns.')
    construct.add_argument('--p', type=int, help='The prime of cyclic-pk.')
    construct.add_argument('--k', type=int, help='The exponent of cyclic-pk.')
    construct.add_argument('--parts', help='Comma separated cyclic orders of abelian-join.')
    construct.add_argument('--graph', help='Graph JSON file of graph-lattice.')
    construct.add_argument('--unverified', action='store_true', help='cyclic-pk: allow any odd prime.')
    construct.add_argument('--no-verify', dest='verify', action='store_false',
                           help='Skip the automorphism search; the verdict is then false.')
    construct.add_argument('--out', help='Poset JSON output file.')
    construct.add_argument('--action-out', help='Action JSON output file.')
    construct.add_argument('--certificate-out', help='Certificate JSON output file.')
    construct.add_argument('--dot', help='DOT output file.')

    aut = subparsers.add_parser('aut', parents=[common], help='Automorphism group of a poset file.')
    aut.add_argument('--poset', required=True, help='Poset JSON file.')
    aut.add_argument('--fix', action='append', default=[], help='Label of a point to fix (JSON or plain text).')

    verify = subparsers.add_parser('verify', parents=[common], help='Recheck a certificate file.')
    verify.add_argument('--certificate', required=True, help='Certificate JSON file.')

    beta_parser = subparsers.add_parser('beta', parents=[common], help='Search the smallest realizer of a group.')
    beta_parser.add_argument('--group', required=True, help='Group descriptor.')
    beta_parser.add_argument('--max-points', type=int, required=True, help='Largest searched poset size.')
    beta_parser.add_argument('--out', help='Report JSON output file.')

    face = subparsers.add_parser('face-poset', parents=[common], help='Face poset of a graph file.')
    face.add_argument('--graph', required=True, help='Graph JSON file.')
    face.add_argument('--bounded', action='store_true', help='Add a minimum and a maximum.')
    face.add_argument('--out', help='Poset JSON output file.')
    face.add_argument('--dot', help='DOT output file.')

    subparsers.add_parser('bounds', parents=[common], help='Print the table of known bounds.')

    crosscheck = subparsers.add_parser(
        'crosscheck', parents=[common], help='Compare the engine with brute force on a random corpus.'
    )
    crosscheck.add_argument('--count', type=int, default=500, help='Number of random posets.')
    crosscheck.add_argument('--max-points', type=int, default=8, help='Largest random poset size.')
    return parser


def main(argv=None):
    """Entry point of the ``poset-realizer`` command. Returns the exit status."""
    parser = build_parser()
    namespace = parser.parse_args(argv)
    level = logging.INFO if namespace.verbose else logging.ERROR if namespace.quiet else logging.WARNING
    logging.basicConfig(level=level, format='%(levelname)s %(name)s: %(message)s', stream=sys.stderr)
    try:
        config = RunConfig.from_namespace(namespace)
        return run(config)
    except PosetRealizerError as error:
        _emit(error.to_dict())
        return 2
    except (OSError, ValueError) as error:
        _emit(dict(error=type(error).__name__, message=str(error)))
        return 2
