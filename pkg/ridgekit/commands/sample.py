"""The ridgekit sample command."""

import logging
import sys

from ridgekit.commands import Command, CommandError, Option
from ridgekit.network.codec import dump, dumps
from ridgekit.sampler.neurons import build_network
from ridgekit.sampler.student_t import StudentTSampler


class Sample(Command):
    """Sample a network from the ridgelet transform of a target."""

    name = 'sample'
    author = 'The ridgekit Project'
    description = ('Draw N randomized neurons for the target and write the '
                   'resulting network in the ridgekit network format.')
    option_list = [
        Option('-N', '--neurons',
               dest='neuron_count',
               type=int,
               metavar='N',
               default=256,
               help='The number of neurons.'),
        Option('--seed',
               dest='seed',
               type=int,
               default=0,
               help='The seed of the neuron stream.'),
        Option('-o', '--output',
               dest='network_file',
               metavar='FILE',
               default=None,
               help='Write the network to this file instead of standard '
                    'output.'),
        Command.model_options,
    ]

    def main(self):
        if self.options.neuron_count < 1:
            raise CommandError('--neurons must be a positive integer')

        if self.options.seed < 0:
            raise CommandError('--seed must be a non-negative integer')

        cfg = self.experiment_config()
        pair = cfg.pair()
        net = build_network(pair, cfg.target_function(),
                            self.options.neuron_count,
                            StudentTSampler(pair.m, self.options.seed),
                            workers=self.options.threads)

        if self.options.network_file:
            dump(net, self.options.network_file)
            logging.info('Wrote %d neurons to %s', net.size,
                         self.options.network_file)
        else:
            sys.stdout.write(dumps(net))
