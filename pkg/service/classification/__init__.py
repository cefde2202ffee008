"""
Singularity classification of X̄_ω by dual-graph shape and by table lookup,
plus the del Pezzo check.

Public API
~~~~~~~~~~
* ``kawamata_classify(schematic | weighted_graph)`` -> ``SingularityClass``
* ``table_classify(ks)`` -> ``TableMatch`` or ``NoMatch``
* ``del_pezzo_report(ks)``, ``singular_del_pezzo_list()``
* ``classify_record(ks)`` -> ``ClassificationRecord``
"""
from service.classification.del_pezzo import (
    ADE_TYPES,
    DelPezzoReport,
    del_pezzo_report,
    singular_del_pezzo_list,
)
from service.classification.kawamata import (
    LC_TRIPLES,
    LT_TRIPLES,
    SingularityClass,
    classify_arms,
    kawamata_classify,
    worst,
)
from service.classification.record import classify_record
from service.classification.tables import (
    NoMatch,
    TableMatch,
    TableResult,
    TableRow,
    substitute_template,
    table_classify,
)

__all__ = [
    'ADE_TYPES',
    'DelPezzoReport',
    'del_pezzo_report',
    'singular_del_pezzo_list',
    'LC_TRIPLES',
    'LT_TRIPLES',
    'SingularityClass',
    'classify_arms',
    'kawamata_classify',
    'worst',
    'classify_record',
    'NoMatch',
    'TableMatch',
    'TableResult',
    'TableRow',
    'substitute_template',
    'table_classify',
]
