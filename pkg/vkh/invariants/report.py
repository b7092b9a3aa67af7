from typing import Optional
from vkh.Diagram import Diagram, crossing_counts
from vkh.LaurentPoly import eval_at_one
from vkh.Settings import Settings
from vkh.StateSum import jones, unoriented_jones
from vkh.invariants.LinkingMatrix import linking_matrix
from vkh.invariants.MultiCoreDecomposition import multi_core
from vkh.invariants.ParityData import parities
from vkh.invariants.ParityScheme import ParityScheme
from vkh.invariants.modified_linking import lambda_tilde_doubled, l_tilde_doubled, classical_sign_exponent, unoriented_sign_exponent


def invariants_report(diagram: Diagram, scheme: ParityScheme = ParityScheme.MULTICORE, settings: Optional[Settings] = None) -> dict:
    report = {'scheme': scheme.value}
    report.update(parities(diagram).to_dict())
    report['linking_matrix'] = [list(row) for row in linking_matrix(diagram).doubled]
    report.update(multi_core(diagram).to_dict())
    if scheme is ParityScheme.NONE:
        report['lambda_tilde'] = None
        report['l_tilde'] = None
    else:
        doubled = lambda_tilde_doubled(diagram, scheme)
        report['lambda_tilde'] = doubled
        report['l_tilde'] = l_tilde_doubled(doubled)
    report['crossing_counts'] = crossing_counts(diagram)._asdict()
    report['classical_sign_exponent'] = classical_sign_exponent(diagram)
    report['unoriented_sign_exponent'] = unoriented_sign_exponent(diagram, scheme)
    report['jones_at_one'] = eval_at_one(jones(diagram, settings)).to_list()
    report['unoriented_jones_at_one'] = eval_at_one(unoriented_jones(diagram, scheme, settings)).to_list()
    return report
