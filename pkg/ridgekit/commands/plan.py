"""The ridgekit plan command."""

from ridgekit.commands import Command, CommandError, Option, ParseError
from ridgekit.harness.rates import plan_neurons


class Plan(Command):
    """Print the neuron count that reaches a target accuracy."""

    name = 'plan'
    author = 'The ridgekit Project'
    description = ('Compute N = ceil(C2 m^C3 eps^(-q/(q-1))) with '
                   'q = min(2, p), the width that guarantees an error of '
                   'at most eps.')
    option_list = [
        Option('--c2',
               dest='c2',
               type=float,
               default=1.0,
               help='The leading constant.'),
        Option('--c3',
               dest='c3',
               type=float,
               default=0.0,
               help='The exponent of the input dimension.'),
        Option('-m', '--dim',
               dest='dim',
               type=int,
               metavar='M',
               default=1,
               help='The input dimension.'),
        Option('-p',
               dest='p',
               type=float,
               default=2.0,
               help='The integrability exponent. Must exceed 1.'),
        Option('--eps',
               dest='eps',
               type=float,
               default=None,
               help='The target accuracy.'),
    ]

    def main(self):
        if self.options.eps is None:
            raise ParseError('--eps is required')

        try:
            count = plan_neurons(self.options.c2, self.options.c3,
                                 self.options.dim, self.options.p,
                                 self.options.eps)
        except ValueError as e:
            raise CommandError(str(e))

        print(count)
