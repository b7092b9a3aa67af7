#!/usr/bin/python
"""Main entry-point into the 'vkh' CLI application.

vkh computes bracket, Jones and Khovanov type invariants of virtual links given as planar diagram (PD) codes.

Command details:
    bracket             Print the Kauffman bracket.
    jones               Print the oriented Jones polynomial.
    ujones              Print the unoriented Jones polynomial.
    kh                  Print oriented Khovanov homology.
    ukh                 Print unoriented Khovanov homology.
    lee                 Print unoriented Lee homology with its quantum filtration.
    decompose           Print the multi-core decomposition and component parities.
    invariants          Print parities, linking numbers, sign exponents and evaluations.
    selftest            Run structural checks on the fixture corpus and random diagrams.
    fixtures            List the fixture corpus.

Usage:
    vkh (bracket | jones | decompose) [<path>] [--input=PD] [--fixture=NAME] [--format=FORMAT] [--jobs=N] [--verbose]
    vkh (ujones | invariants) [<path>] [--input=PD] [--fixture=NAME] [--scheme=SCHEME] [--format=FORMAT] [--jobs=N] [--verbose]
    vkh (kh | lee) [<path>] [--input=PD] [--fixture=NAME] [--ring=RING] [--format=FORMAT] [--jobs=N] [--debug-dump] [--verbose]
    vkh ukh [<path>] [--input=PD] [--fixture=NAME] [--ring=RING] [--scheme=SCHEME] [--incorporate-sign] [--format=FORMAT] [--jobs=N] [--debug-dump] [--verbose]
    vkh selftest [--random=N] [--seed=SEED] [--format=FORMAT] [--jobs=N] [--verbose]
    vkh fixtures [--format=FORMAT] [--verbose]
    vkh (-h | --help)
    vkh (-v | --version)


Options:
    -i PD --input=PD            Inline PD code, either PD[X[...],...] or a JSON list of 4-tuples.
    --fixture=NAME              Load a diagram from the fixture corpus.
    --ring=RING                 Coefficient ring: z, q or f2 [default: z].
    --scheme=SCHEME             Parity scheme: multicore, firstcore, allone or none [default: multicore].
    --incorporate-sign          Shift homological degree by l~ so the Euler characteristic matches the unoriented Jones polynomial.
    --format=FORMAT             Output format: text or json [default: text].
    --jobs=N                    Worker process cap, falls back to VKH_JOBS.
    --debug-dump                Append resolved states and edge maps; enables differential checks.
    --random=N                  Number of random diagrams for selftest [default: 0].
    --seed=SEED                 Random seed for selftest [default: 0].
    --verbose                   Enable debug logging.
    -v --version                Display version info
"""

import sys
import signal
import logging
from functools import wraps
from typing import Optional, Callable

from docopt import docopt

from vkh.Request import Request
from vkh.Runner import run
from vkh.exceptions import InvalidValueError
from vkh import __version__

OPTIONS = docopt(__doc__)

if OPTIONS['--version']:
    print(__version__)
    sys.exit(0)


def command(name: Optional[str] = None) -> Callable:
    """Decorator that registers the chosen command/function.

    A function whose name is not a command in the docstring raises KeyError, since that is a bug in this script.
    The command picked on the command line is stored as the attribute `chosen` and executed by main().
    """

    def function_wrap(func: Callable) -> Callable:

        @wraps(func)
        def wrapped() -> Callable:
            return func()

        command_name = name if name else func.__name__

        if command_name not in OPTIONS:
            raise KeyError('Cannot register {}, not mentioned in docstring/docopt.'.format(command_name))
        if OPTIONS[command_name]:
            command.chosen = func  # type: ignore

        return wrapped

    return function_wrap


def execute() -> None:
    logging.basicConfig(level=logging.DEBUG if OPTIONS['--verbose'] else logging.WARNING)
    try:
        request = Request.from_options(OPTIONS)
    except InvalidValueError as e:
        print('Error: {}'.format(e), file=sys.stderr)
        sys.exit(1)

    result = run(request)
    if result.output:
        print(result.output)
    if result.error:
        print(result.error, file=sys.stderr)
    sys.exit(result.exit_code)


@command()
def bracket() -> None:
    execute()


@command()
def jones() -> None:
    execute()


@command()
def ujones() -> None:
    execute()


@command()
def kh() -> None:
    execute()


@command()
def ukh() -> None:
    execute()


@command()
def lee() -> None:
    execute()


@command()
def decompose() -> None:
    execute()


@command()
def invariants() -> None:
    execute()


@command()
def selftest() -> None:
    execute()


@command()
def fixtures() -> None:
    execute()


def main() -> None:
    signal.signal(signal.SIGINT, lambda _signal, _frame: sys.exit(0))  # Properly handle Control+C
    getattr(command, 'chosen')()  # Execute the function specified by the user.


if __name__ == '__main__':
    main()
