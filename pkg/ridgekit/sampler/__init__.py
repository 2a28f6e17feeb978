"""Student t sampling, randomized neurons and sampled networks."""

from ridgekit.sampler.neurons import (AuditResult, NeuronDraw,
                                      build_network, draw_neuron,
                                      neuron_readouts, second_moment_audit,
                                      second_moment_bound)
from ridgekit.sampler.student_t import (StudentTSampler, sample_student_t,
                                        student_t_pdf)


__all__ = [
    'AuditResult',
    'NeuronDraw',
    'StudentTSampler',
    'build_network',
    'draw_neuron',
    'neuron_readouts',
    'sample_student_t',
    'second_moment_audit',
    'second_moment_bound',
    'student_t_pdf',
]
