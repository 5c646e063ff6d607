import struct
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Tuple, Union

from ..config.constants import (
    META_END_OF_TRACK,
    META_TEMPO,
    SMF_HEADER_TAG,
    SMF_TRACK_TAG,
    STATUS_KINDS,
)
from ..errors import MidiParseError
from ..utils.diagnostics import Diagnostics
from ..utils.logger import get_logger
from .decoder import build_message
from .messages import TimedEvent

logger = get_logger(__name__)

MAX_VLQ_BYTES = 4


@dataclass
class SmfDocument:
    """Conteúdo de um Standard MIDI File com ticks absolutos"""
    format: int
    ticks_per_quarter: int
    tracks: List[List[TimedEvent]]
    meta_tempo_changes: List[Tuple[int, int]] = field(default_factory=list)
    diagnostics: Diagnostics = field(default_factory=Diagnostics)

    @property
    def event_count(self) -> int:
        return sum(len(track) for track in self.tracks)


class _Reader:
    """Cursor sobre os bytes do arquivo com offsets absolutos"""

    def __init__(self, data: bytes, start: int = 0, end: int = None):
        self.data = data
        self.pos = start
        self.end = len(data) if end is None else end

    def remaining(self) -> int:
        return self.end - self.pos

    def take(self, n: int, what: str) -> bytes:
        if n > self.remaining():
            raise MidiParseError(f"Fim inesperado ao ler {what}", self.pos)
        chunk = self.data[self.pos:self.pos + n]
        self.pos += n
        return chunk

    def byte(self, what: str) -> int:
        return self.take(1, what)[0]

    def vlq(self) -> int:
        start = self.pos
        value = 0
        for _ in range(MAX_VLQ_BYTES):
            b = self.byte("quantidade de tamanho variável")
            value = (value << 7) | (b & 0x7F)
            if not b & 0x80:
                return value
        raise MidiParseError("Quantidade de tamanho variável excede 4 bytes", start)


def _parse_track(reader: _Reader, track_index: int, doc: SmfDocument) -> List[TimedEvent]:
    events: List[TimedEvent] = []
    tick = 0
    running_status = None

    while reader.remaining() > 0:
        tick += reader.vlq()
        offset = reader.pos
        status = reader.byte("status")

        if status == 0xFF:
            meta_type = reader.byte("tipo de meta-evento")
            length = reader.vlq()
            payload = reader.take(length, "meta-evento")
            if meta_type == META_TEMPO and length == 3:
                doc.meta_tempo_changes.append((tick, int.from_bytes(payload, "big")))
            elif meta_type == META_END_OF_TRACK:
                break
            else:
                doc.diagnostics.record("skipped_meta", f"meta 0x{meta_type:02X} no tick {tick}")
            continue

        if status in (0xF0, 0xF7):
            length = reader.vlq()
            reader.take(length, "sysex")
            doc.diagnostics.record("skipped_sysex", f"sysex de {length} bytes no tick {tick}")
            running_status = None
            continue

        if status & 0x80:
            if status >= 0xF0:
                raise MidiParseError(f"Status 0x{status:02X} inválido em trilha", offset)
            running_status = status
            first = reader.byte("dados")
        else:
            if running_status is None:
                raise MidiParseError("Byte de dados sem running status", offset)
            first = status
            status = running_status

        data = [first]
        if STATUS_KINDS[status & 0xF0][1] == 2:
            data.append(reader.byte("dados"))
        if any(b & 0x80 for b in data):
            raise MidiParseError("Byte de dados >= 0x80", offset)

        events.append(TimedEvent(tick=tick, message=build_message(status, data), track_index=track_index))

    return events


def parse_smf(data: bytes) -> SmfDocument:
    """
    Faz o parse de um Standard MIDI File.

    Args:
        data: Conteúdo binário do arquivo

    Returns:
        SmfDocument: Trilhas com ticks absolutos e mudanças de tempo

    Raises:
        MidiParseError: Cabeçalho inválido, chunk truncado, VLQ longa demais
            ou divisão SMPTE
    """
    reader = _Reader(data)
    if reader.remaining() < 8 or reader.take(4, "cabeçalho") != SMF_HEADER_TAG:
        raise MidiParseError("Cabeçalho MThd ausente", 0)

    header_length = struct.unpack(">I", reader.take(4, "tamanho do cabeçalho"))[0]
    if header_length < 6:
        raise MidiParseError("Cabeçalho MThd curto demais", 4)
    if header_length > reader.remaining():
        raise MidiParseError("Chunk truncado", 4)
    fmt, ntracks, division = struct.unpack(">HHH", reader.take(6, "cabeçalho"))
    reader.take(header_length - 6, "cabeçalho")

    if fmt not in (0, 1, 2):
        raise MidiParseError(f"Formato SMF desconhecido: {fmt}", 8)
    if division & 0x8000:
        raise MidiParseError("Divisão SMPTE não suportada", 12)
    if division == 0:
        raise MidiParseError("ticks_per_quarter deve ser positivo", 12)
    if ntracks == 0:
        raise MidiParseError("Arquivo sem trilhas", 10)

    doc = SmfDocument(format=fmt, ticks_per_quarter=division, tracks=[])

    while len(doc.tracks) < ntracks:
        chunk_offset = reader.pos
        if reader.remaining() < 8:
            raise MidiParseError(
                f"Esperadas {ntracks} trilhas, encontradas {len(doc.tracks)}", chunk_offset
            )
        tag = reader.take(4, "tag de chunk")
        length = struct.unpack(">I", reader.take(4, "tamanho de chunk"))[0]
        if length > reader.remaining():
            raise MidiParseError("Chunk truncado", chunk_offset)

        if tag != SMF_TRACK_TAG:
            doc.diagnostics.record("skipped_chunk", f"chunk {tag!r} em {chunk_offset}")
            reader.take(length, "chunk")
            continue

        track_reader = _Reader(data, reader.pos, reader.pos + length)
        doc.tracks.append(_parse_track(track_reader, len(doc.tracks), doc))
        reader.pos += length

    logger.debug(
        f"SMF formato {fmt}: {len(doc.tracks)} trilhas, {doc.event_count} eventos, "
        f"{len(doc.meta_tempo_changes)} mudanças de tempo"
    )
    return doc


def load_smf(path: Union[str, Path]) -> SmfDocument:
    """Lê e faz o parse de um arquivo .mid do disco."""
    try:
        return parse_smf(Path(path).read_bytes())
    except MidiParseError as e:
        logger.error(f"Erro ao ler {path}: {e}")
        raise


def _off_before_on(group: List[TimedEvent]) -> List[TimedEvent]:
    # Dentro de um mesmo tick, NoteOff sobe para antes do NoteOn da mesma nota
    ordered: List[TimedEvent] = []
    for event in group:
        msg = event.message
        if msg.is_note_off:
            key = (msg.channel, msg.note)
            for i, placed in enumerate(ordered):
                pm = placed.message
                if pm.is_note_on and (pm.channel, pm.note) == key:
                    ordered.insert(i, event)
                    break
            else:
                ordered.append(event)
        else:
            ordered.append(event)
    return ordered


def merge_tracks(doc: SmfDocument) -> List[TimedEvent]:
    """
    Junta todas as trilhas numa lista única ordenada no tempo.

    Ordenação estável por (tick, trilha, índice original); num mesmo tick o
    NoteOff de uma nota vem antes do NoteOn da mesma nota e canal, evitando
    notas de duração zero presas.

    Args:
        doc: Documento SMF

    Returns:
        List[TimedEvent]: Eventos em ordem global
    """
    indexed = [
        (event.tick, event.track_index, i, event)
        for track in doc.tracks
        for i, event in enumerate(track)
    ]
    indexed.sort(key=lambda item: item[:3])

    merged: List[TimedEvent] = []
    group: List[TimedEvent] = []
    for tick, _, _, event in indexed:
        if group and group[0].tick != tick:
            merged.extend(_off_before_on(group))
            group = []
        group.append(event)
    merged.extend(_off_before_on(group))
    return merged
