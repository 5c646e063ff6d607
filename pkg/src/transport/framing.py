"""Protocolo serial de 4 bytes: [0xA5, id do atuador, intensidade, CRC-8].

CRC-8 com polinômio 0x07, valor inicial 0x00, sem XOR final, calculado
sobre id e intensidade.
"""
from typing import List, Tuple

from ..config.constants import CRC8_INIT, CRC8_POLY, FRAME_LENGTH, FRAME_SYNC
from ..layout.sites import ActuatorSite
from ..utils.diagnostics import Diagnostics


def crc8(data: bytes, poly: int = CRC8_POLY, init: int = CRC8_INIT) -> int:
    crc = init
    for d in data:
        crc ^= d
        for _ in range(8):
            if crc & 0x80:
                crc = ((crc << 1) & 0xFF) ^ poly
            else:
                crc = (crc << 1) & 0xFF
    return crc


def encode_frame(site: ActuatorSite, intensity: int) -> bytes:
    """
    Codifica um comando de atuador num quadro de 4 bytes.

    Args:
        site: Atuador (id 0-9)
        intensity: 0-255

    Returns:
        bytes: [0xA5, id, intensidade, crc8(id, intensidade)]
    """
    if not 0 <= intensity <= 255:
        raise ValueError(f"Intensidade fora de 0-255: {intensity}")
    site_id = int(ActuatorSite(site))
    return bytes([FRAME_SYNC, site_id, intensity, crc8(bytes([site_id, intensity]))])


def decode_frame(frame: bytes) -> Tuple[ActuatorSite, int]:
    """
    Decodifica um quadro de 4 bytes.

    Raises:
        ValueError: Tamanho, sync, id ou CRC inválidos
    """
    if len(frame) != FRAME_LENGTH:
        raise ValueError(f"Quadro deve ter {FRAME_LENGTH} bytes, recebidos {len(frame)}")
    sync, site_id, intensity, crc = frame
    if sync != FRAME_SYNC:
        raise ValueError(f"Byte de sync inválido: 0x{sync:02X}")
    if site_id > 9:
        raise ValueError(f"Id de atuador inválido: {site_id}")
    if crc8(bytes([site_id, intensity])) != crc:
        raise ValueError("CRC inválido")
    return ActuatorSite(site_id), intensity


class FrameReader:
    """
    Lado receptor: varre um fluxo de bytes e ressincroniza no próximo
    quadro com sync 0xA5 e CRC válidos.
    """

    def __init__(self):
        self._buffer = bytearray()
        self.diagnostics = Diagnostics()

    def feed(self, data: bytes) -> List[Tuple[ActuatorSite, int]]:
        self._buffer.extend(data)
        frames = []
        while True:
            start = self._buffer.find(FRAME_SYNC)
            if start < 0:
                if self._buffer:
                    self.diagnostics.record("resync_skip", f"{len(self._buffer)} bytes sem sync")
                self._buffer.clear()
                break
            if start > 0:
                self.diagnostics.record("resync_skip", f"{start} bytes antes do sync")
                del self._buffer[:start]
            if len(self._buffer) < FRAME_LENGTH:
                break
            try:
                frames.append(decode_frame(bytes(self._buffer[:FRAME_LENGTH])))
                del self._buffer[:FRAME_LENGTH]
            except ValueError:
                self.diagnostics.record("bad_frame")
                del self._buffer[:1]
        return frames
