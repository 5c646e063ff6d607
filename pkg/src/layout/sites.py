from enum import Enum, IntEnum
from typing import Dict, FrozenSet


class ActuatorSite(IntEnum):
    """
    Os 10 atuadores da palma. O valor é o id fixo usado no protocolo serial
    (contrato com o firmware: não reordenar).
    """
    TIP_THUMB = 0
    TIP_INDEX = 1
    TIP_MIDDLE = 2
    TIP_RING = 3
    TIP_LITTLE = 4
    MCP_RADIAL = 5
    MCP_CENTER = 6
    MCP_ULNAR = 7
    THENAR = 8
    HYPOTHENAR = 9

    @property
    def label(self) -> str:
        """Nome canônico usado em logs e perfis (ex: "TipRing")"""
        return _LABELS[self]

    @classmethod
    def from_label(cls, label: str) -> "ActuatorSite":
        try:
            return _BY_LABEL[label]
        except KeyError:
            raise ValueError(f"Atuador desconhecido: {label!r}") from None

    @classmethod
    def fingertip(cls, finger: int) -> "ActuatorSite":
        """Dedo 1 (polegar) a 5 (mínimo) → ponta correspondente"""
        if not 1 <= finger <= 5:
            raise ValueError(f"Dedo deve estar entre 1 e 5: {finger}")
        return cls(finger - 1)


_LABELS = {
    ActuatorSite.TIP_THUMB: "TipThumb",
    ActuatorSite.TIP_INDEX: "TipIndex",
    ActuatorSite.TIP_MIDDLE: "TipMiddle",
    ActuatorSite.TIP_RING: "TipRing",
    ActuatorSite.TIP_LITTLE: "TipLittle",
    ActuatorSite.MCP_RADIAL: "McpRadial",
    ActuatorSite.MCP_CENTER: "McpCenter",
    ActuatorSite.MCP_ULNAR: "McpUlnar",
    ActuatorSite.THENAR: "Thenar",
    ActuatorSite.HYPOTHENAR: "Hypothenar",
}
_BY_LABEL = {label: site for site, label in _LABELS.items()}


class SiteGroup(Enum):
    """Grupos funcionais: pontas, linha MCP e região de graves"""
    TIPS = "tips"
    MIDDLE = "middle"
    BASS = "bass"


GROUP_MEMBERS: Dict[SiteGroup, FrozenSet[ActuatorSite]] = {
    SiteGroup.TIPS: frozenset(ActuatorSite(i) for i in range(5)),
    SiteGroup.MIDDLE: frozenset({ActuatorSite.MCP_RADIAL, ActuatorSite.MCP_CENTER, ActuatorSite.MCP_ULNAR}),
    SiteGroup.BASS: frozenset({ActuatorSite.THENAR, ActuatorSite.HYPOTHENAR}),
}


def site_group(site: ActuatorSite) -> SiteGroup:
    """Grupo ao qual o atuador pertence (partição total dos 10 atuadores)."""
    for group, members in GROUP_MEMBERS.items():
        if site in members:
            return group
    raise ValueError(f"Atuador sem grupo: {site}")
