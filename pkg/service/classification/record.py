"""
One classification record per key sequence, as used by ``classify`` and
``enumerate``.
"""

from logging import getLogger

from service.actions import g2a_exists
from service.classification.del_pezzo import del_pezzo_report
from service.classification.kawamata import kawamata_classify
from service.classification.tables import TableMatch, table_classify
from service.key_sequence import KeySequence, require_surface
from service.reports.models import ClassificationRecord
from service.resolution import dual_graph_schematic, newton_pairs, weighted_graph_from_schematic

logger = getLogger(__name__)


def classify_record(ks: KeySequence) -> ClassificationRecord:
    require_surface(ks)
    schematic = dual_graph_schematic(newton_pairs(ks))
    schematic_class = kawamata_classify(schematic)
    explicit_class = kawamata_classify(weighted_graph_from_schematic(schematic))
    table = table_classify(ks)
    exists = g2a_exists(ks)
    pezzo = del_pezzo_report(ks)

    agree = table.singularity_class is schematic_class
    if not agree:
        logger.warning(
            f"{ks}: schematic route says {schematic_class.value}, "
            f"table route says {table.singularity_class.value}"
        )
    matched = isinstance(table, TableMatch)
    if matched and table.g2a != exists:
        logger.warning(f"{ks}: row {table.row.value} 𝔾²ₐ column {table.g2a} but g2a_exists = {exists}")

    return ClassificationRecord(
        key_sequence=list(ks.omegas),
        singularity_class=schematic_class.value,
        explicit_class=explicit_class.value,
        matched_row=table.row.value if matched else None,
        template=table.template if matched else None,
        parameters=dict(table.parameters) if matched else {},
        table_class=table.singularity_class.value,
        routes_agree=agree,
        g2a=exists,
        table_g2a=table.g2a if matched else None,
        del_pezzo=pezzo.is_del_pezzo_with_g2a,
        singular_del_pezzo=pezzo.is_singular_del_pezzo,
        ade_types=list(pezzo.ade_types),
    )
