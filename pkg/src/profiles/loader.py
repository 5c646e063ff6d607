import json
from pathlib import Path
from typing import Any, Dict, Union

from pydantic import ValidationError

from ..config.settings import PRESETS_DIR, PROFILE_SEARCH_PATH
from ..errors import ProfileError
from ..layout.circle import ChromaticCircle
from ..mapping.profile import DEFAULT_CHANNEL_ROLES, MappingProfile, RabbitParams
from ..utils.logger import get_logger
from .schema import ProfileDocument

logger = get_logger(__name__)


def _error_path(loc) -> str:
    """('melody', 'finger_table', '76', '[key]') → 'melody.finger_table.76'"""
    path = ".".join(str(part) for part in loc if part != "[key]")
    return path or "<raiz>"


def _to_kwargs(doc: ProfileDocument) -> Dict[str, Any]:
    kwargs: Dict[str, Any] = {}

    if doc.layout.circle_anchors is not None:
        try:
            kwargs["circle"] = ChromaticCircle(doc.layout.circle_anchors)
        except ValueError as e:
            raise ProfileError("layout.circle_anchors", str(e)) from e

    melody = doc.melody
    if melody.mode is not None:
        kwargs["melody_mode"] = melody.mode
    if melody.velocity_law is not None:
        kwargs["velocity_law"] = melody.velocity_law
    if melody.finger_table is not None:
        kwargs["finger_table"] = melody.finger_table
    if melody.octave_bands is not None:
        kwargs["octave_bands"] = melody.octave_bands

    bass = doc.bass
    for field, key in (
        ("base_note", "bass_base_note"),
        ("span_semitones", "bass_span_semitones"),
        ("base_freq_hz", "bass_base_freq_hz"),
        ("top_freq_hz", "bass_top_freq_hz"),
        ("chord_sites", "chord_sites"),
        ("bass_sites", "bass_sites"),
    ):
        value = getattr(bass, field)
        if value is not None:
            kwargs[key] = value

    if doc.percussion.duration_ms is not None:
        kwargs["percussion_duration_s"] = doc.percussion.duration_ms / 1000
    if doc.percussion.table is not None:
        kwargs["percussion_table"] = {note: tuple(entries) for note, entries in doc.percussion.table.items()}

    if doc.rabbit is not None:
        try:
            kwargs["rabbit"] = RabbitParams(**doc.rabbit.model_dump(exclude_none=True))
        except ValueError as e:
            raise ProfileError("rabbit", str(e)) from e

    # Mescla sobre os papéis padrão: canal 9 continua percussão se omitido
    kwargs["channel_roles"] = {**DEFAULT_CHANNEL_ROLES, **doc.channels}
    kwargs["controller_map"] = dict(doc.controllers)
    return kwargs


def parse_profile(document: Any) -> MappingProfile:
    """
    Valida um documento de perfil e monta o MappingProfile.

    Seções omitidas assumem os padrões; o documento vazio é o perfil padrão.

    Args:
        document: Objeto JSON já decodificado

    Returns:
        MappingProfile: Perfil validado

    Raises:
        ProfileError: Campo inválido, com o caminho do campo
    """
    try:
        doc = ProfileDocument.model_validate(document)
    except ValidationError as e:
        first = e.errors()[0]
        logger.debug(f"Perfil rejeitado com {e.error_count()} erro(s)")
        raise ProfileError(_error_path(first["loc"]), first["msg"]) from None

    try:
        return MappingProfile(**_to_kwargs(doc))
    except ValueError as e:
        raise ProfileError("<perfil>", str(e)) from e


def resolve_profile(name: Union[str, Path]) -> Path:
    """
    Localiza um perfil: caminho literal, depois TACTILE_PROFILE_PATH, depois
    os presets embutidos. Nomes sem extensão ganham ".json".
    """
    candidate = Path(name)
    if candidate.is_file():
        return candidate

    filenames = [candidate.name] if candidate.suffix else [f"{candidate.name}.json", candidate.name]
    for directory in [*PROFILE_SEARCH_PATH, PRESETS_DIR]:
        for filename in filenames:
            path = Path(directory) / filename
            if path.is_file():
                return path
    raise ProfileError(str(name), "perfil não encontrado")


def load_profile(name: Union[str, Path, None] = None) -> MappingProfile:
    """
    Carrega um perfil por nome de preset ou caminho.

    Args:
        name: Preset ("fur-elise"), caminho ou None para o perfil padrão

    Returns:
        MappingProfile: Perfil validado
    """
    if name is None:
        return MappingProfile()

    path = resolve_profile(name)
    try:
        with open(path, "r", encoding="utf-8") as f:
            document = json.load(f)
    except json.JSONDecodeError as e:
        logger.error(f"Erro ao carregar perfil {path}: {e}")
        raise ProfileError(str(path), f"JSON inválido: {e}") from e

    profile = parse_profile(document)
    logger.info(f"Perfil carregado: {path}")
    return profile


def available_presets() -> Dict[str, Path]:
    return {path.stem: path for path in sorted(PRESETS_DIR.glob("*.json"))}
