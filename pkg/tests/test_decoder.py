import mido
import pytest

from src.config.constants import STATUS_KINDS, MessageKind
from src.midi.decoder import DecoderState, decode_all, decode_stream
from src.midi.messages import MidiMessage

_STATUS_BY_KIND = {kind: status for status, (kind, _) in STATUS_KINDS.items()}


def to_bytes(message: MidiMessage):
    status = _STATUS_BY_KIND[message.kind] | message.channel
    length = STATUS_KINDS[status & 0xF0][1]
    return [status, message.data1, message.data2][: length + 1]


def mido_reference(data: bytes):
    # mido mantém NoteOn vel 0 como note_on; normaliza para NoteOff
    result = []
    for msg in mido.parse_all(data):
        if msg.is_realtime or msg.type == "sysex":
            continue
        raw = msg.bytes()
        if raw[0] & 0xF0 == 0x90 and raw[2] == 0:
            raw[0] = 0x80 | (raw[0] & 0x0F)
        result.append(raw)
    return result


def random_messages(rng, count):
    """Mensagens de canal aleatórias como listas de bytes (sem running status)."""
    statuses = [0x80, 0x90, 0xB0, 0xC0, 0xE0]
    messages = []
    for _ in range(count):
        status = int(rng.choice(statuses)) | int(rng.integers(0, 16))
        length = STATUS_KINDS[status & 0xF0][1]
        messages.append([status] + [int(b) for b in rng.integers(0, 128, size=length)])
    return messages


def with_running_status(messages):
    stream, last = [], None
    for raw in messages:
        stream.extend(raw[1:] if raw[0] == last else raw)
        last = raw[0]
    return bytes(stream)


def decode_in_chunks(data: bytes, cuts):
    state = DecoderState()
    messages = []
    bounds = [0, *sorted(cuts), len(data)]
    for start, end in zip(bounds, bounds[1:]):
        decoded, state = decode_stream(data[start:end], state)
        messages.extend(decoded)
    return messages, state


def test_note_on_triplet():
    assert decode_all([144, 72, 100]) == [MidiMessage(MessageKind.NOTE_ON, 0, 72, 100)]


def test_note_off_triplet():
    assert decode_all([128, 72, 0]) == [MidiMessage(MessageKind.NOTE_OFF, 0, 72, 0)]


def test_running_status_with_velocity_zero():
    messages = decode_all([144, 72, 100, 72, 0])
    assert messages == [
        MidiMessage(MessageKind.NOTE_ON, 0, 72, 100),
        MidiMessage(MessageKind.NOTE_OFF, 0, 72, 0),
    ]
    assert [to_bytes(m) for m in messages] == mido_reference(bytes([144, 72, 100, 144, 72, 0]))


def test_stray_data_bytes_are_counted_not_raised():
    messages, state = decode_stream([10, 20, 0x90, 60, 100], DecoderState())
    assert messages == [MidiMessage(MessageKind.NOTE_ON, 0, 60, 100)]
    assert state.discarded == 2


def test_realtime_bytes_do_not_break_running_status():
    messages = decode_all([0x90, 60, 0xF8, 100, 0xFE, 62, 0xFA, 90])
    assert [(m.note, m.velocity) for m in messages] == [(60, 100), (62, 90)]


def test_sysex_cancels_running_status():
    messages, state = decode_stream([0x90, 60, 100, 0xF0, 1, 2, 3, 0xF7, 62, 90], DecoderState())
    assert len(messages) == 1
    assert state.discarded == 2


def test_system_common_is_consumed():
    # Song position pointer (2 bytes) entre mensagens de canal
    messages = decode_all([0xF2, 0x10, 0x20, 0xC3, 5])
    assert messages == [MidiMessage(MessageKind.PROGRAM_CHANGE, 3, 5, 0)]


def test_incomplete_message_waits_in_state():
    state = DecoderState()
    first, state = decode_stream([0x90, 60], state)
    assert first == []
    second, state = decode_stream([100], state)
    assert second == [MidiMessage(MessageKind.NOTE_ON, 0, 60, 100)]


def test_empty_input():
    messages, state = decode_stream(b"", DecoderState())
    assert messages == []
    assert state.running_status is None


def test_matches_reference_decoder(rng):
    raw_messages = random_messages(rng, 200)
    flat = bytes(b for raw in raw_messages for b in raw)
    ours = [to_bytes(m) for m in decode_all(flat)]
    assert ours == mido_reference(flat)


def test_running_status_matches_reference_decoder(rng):
    raw_messages = random_messages(rng, 200)
    expected = mido_reference(bytes(b for raw in raw_messages for b in raw))
    ours = [to_bytes(m) for m in decode_all(with_running_status(raw_messages))]
    assert ours == expected


def test_random_chunk_splits_are_equivalent(rng):
    # ~10 kB de mensagens de canal com running status
    raw_messages = random_messages(rng, 4500)
    data = with_running_status(raw_messages)[:10_240]
    assert len(data) == 10_240
    expected = decode_all(data)

    for _ in range(1000):
        cut_count = int(rng.integers(0, 12))
        cuts = rng.integers(0, len(data) + 1, size=cut_count).tolist()
        messages, state = decode_in_chunks(data, cuts)
        assert messages == expected
        assert state.discarded == 0


@pytest.mark.parametrize("channel", [0, 9, 15])
def test_channel_nibble(channel):
    (message,) = decode_all([0xB0 | channel, 7, 64])
    assert message.kind is MessageKind.CONTROL_CHANGE
    assert message.channel == channel
