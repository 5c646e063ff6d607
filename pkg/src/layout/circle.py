from dataclasses import dataclass, field
from typing import Dict, Mapping, Tuple

from .sites import ActuatorSite, SiteGroup, site_group

PITCH_CLASSES = 12

# Âncoras de fallback com espaçamento quase uniforme. Não é a atribuição
# exata da figura original (ilegível no texto), só um padrão documentado.
DEFAULT_ANCHORS: Dict[int, ActuatorSite] = {
    0: ActuatorSite.TIP_THUMB,    # C
    3: ActuatorSite.TIP_INDEX,    # D#
    5: ActuatorSite.TIP_MIDDLE,   # F
    8: ActuatorSite.TIP_RING,     # G#
    10: ActuatorSite.TIP_LITTLE,  # A#
}


@dataclass(frozen=True)
class ChromaticCircle:
    """
    Disco cromático imaginário sob a mão: 12 classes de altura igualmente
    espaçadas, algumas ancoradas em pontas de dedos e o resto virtual.
    """
    anchors: Mapping[int, ActuatorSite] = field(default_factory=lambda: dict(DEFAULT_ANCHORS))

    def __post_init__(self):
        if len(self.anchors) < 2:
            raise ValueError("O círculo precisa de pelo menos duas âncoras")
        for pitch_class, site in self.anchors.items():
            if not 0 <= pitch_class < PITCH_CLASSES:
                raise ValueError(f"Classe de altura inválida: {pitch_class}")
            if site_group(site) is not SiteGroup.TIPS:
                raise ValueError(f"Âncora {site.label} não é uma ponta de dedo")
        if len(set(self.anchors.values())) != len(self.anchors):
            raise ValueError("Âncoras devem usar pontas distintas")

    def is_anchored(self, pitch_class: int) -> bool:
        return pitch_class in self.anchors


def locate_pitch_class(circle: ChromaticCircle, pitch_class: int) -> Tuple[ActuatorSite, ActuatorSite, float]:
    """
    Localiza uma classe de altura entre as âncoras do círculo.

    Args:
        circle: Círculo cromático válido
        pitch_class: 0-11

    Returns:
        Tuple: (âncora anti-horária, âncora horária, fração do arco entre elas).
            Para classe ancorada, as duas âncoras são iguais e a fração é 0.
    """
    pitch_class %= PITCH_CLASSES
    if circle.is_anchored(pitch_class):
        site = circle.anchors[pitch_class]
        return site, site, 0.0

    back = next(
        (pitch_class - k) % PITCH_CLASSES
        for k in range(1, PITCH_CLASSES)
        if (pitch_class - k) % PITCH_CLASSES in circle.anchors
    )
    ahead = next(
        (pitch_class + k) % PITCH_CLASSES
        for k in range(1, PITCH_CLASSES)
        if (pitch_class + k) % PITCH_CLASSES in circle.anchors
    )
    arc = (ahead - back) % PITCH_CLASSES
    fraction = ((pitch_class - back) % PITCH_CLASSES) / arc
    return circle.anchors[back], circle.anchors[ahead], fraction
