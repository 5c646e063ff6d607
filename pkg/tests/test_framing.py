import pytest

from src.layout.sites import ActuatorSite
from src.transport.framing import FrameReader, crc8, decode_frame, encode_frame


def crc8_by_division(data):
    # Resto de data(x)·x^8 mod x^8 + x^2 + x + 1
    remainder = int.from_bytes(data, "big") << 8
    width = len(data) * 8 + 8
    for bit in range(width - 1, 7, -1):
        if remainder >> bit & 1:
            remainder ^= 0x107 << (bit - 8)
    return remainder


def test_golden_frames():
    assert encode_frame(ActuatorSite.TIP_THUMB, 0) == bytes([0xA5, 0x00, 0x00, 0x00])
    assert encode_frame(ActuatorSite.HYPOTHENAR, 255) == bytes([0xA5, 0x09, 0xFF, 0x4E])


def test_crc_matches_polynomial_division():
    for site_id in range(10):
        for intensity in range(256):
            data = bytes([site_id, intensity])
            assert crc8(data) == crc8_by_division(data)


def test_decode_inverts_encode_for_every_pair():
    pairs = [(site, intensity) for site in ActuatorSite for intensity in range(256)]
    assert len(pairs) == 2560
    for site, intensity in pairs:
        assert decode_frame(encode_frame(site, intensity)) == (site, intensity)


def test_encode_rejects_out_of_range_intensity():
    with pytest.raises(ValueError):
        encode_frame(ActuatorSite.THENAR, 256)


@pytest.mark.parametrize(
    "frame",
    [
        bytes([0xA5, 0x09, 0xFF]),
        bytes([0x5A, 0x09, 0xFF, 0x4E]),
        bytes([0xA5, 0x0A, 0x00, crc8(bytes([0x0A, 0x00]))]),
        bytes([0xA5, 0x09, 0xFF, 0x4F]),
    ],
    ids=["short", "sync", "site-id", "crc"],
)
def test_decode_rejects_malformed_frames(frame):
    with pytest.raises(ValueError):
        decode_frame(frame)


def test_reader_skips_garbage_before_sync():
    reader = FrameReader()
    frames = reader.feed(b"\x00\x01" + encode_frame(ActuatorSite.HYPOTHENAR, 255))
    assert frames == [(ActuatorSite.HYPOTHENAR, 255)]
    assert reader.diagnostics.count("resync_skip") == 1


def test_reader_resyncs_after_corrupted_frame():
    reader = FrameReader()
    frames = reader.feed(bytes([0xA5, 0x09, 0xFF, 0x00]) + encode_frame(ActuatorSite.TIP_THUMB, 0))
    assert frames == [(ActuatorSite.TIP_THUMB, 0)]
    assert reader.diagnostics.count("bad_frame") == 1
    assert reader.diagnostics.count("resync_skip") == 1


def test_reader_waits_for_complete_frame():
    reader = FrameReader()
    frame = encode_frame(ActuatorSite.MCP_CENTER, 129)
    assert reader.feed(frame[:2]) == []
    assert reader.feed(frame[2:]) == [(ActuatorSite.MCP_CENTER, 129)]
    assert not reader.diagnostics


def test_noise_bursts_cost_at_most_three_frames(rng):
    # Quadros distintos: cada (site, intensidade) aparece uma vez
    sent = [(ActuatorSite(i % 10), 10 + i) for i in range(40)]
    stream = b"".join(encode_frame(site, intensity) for site, intensity in sent)

    for _ in range(500):
        position = int(rng.integers(0, len(stream) + 1))
        burst = bytes(int(b) for b in rng.integers(0, 256, size=int(rng.integers(1, 4))))
        received = FrameReader().feed(stream[:position] + burst + stream[position:])
        lost = set(sent) - set(received)
        assert len(lost) <= 3
