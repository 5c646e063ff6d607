import dataclasses

from src.config.constants import MessageKind
from src.layout.sites import ActuatorSite
from src.mapping.live import LiveSession
from src.mapping.profile import MappingProfile
from src.midi.messages import MidiMessage
from src.timeline.model import DeviceCommand


def note_on(note, velocity=100, channel=0):
    return MidiMessage(MessageKind.NOTE_ON, channel, note, velocity)


def note_off(note, channel=0):
    return MidiMessage(MessageKind.NOTE_OFF, channel, note, 0)


def test_note_on_then_off(default_profile):
    session = LiveSession(default_profile)
    session.feed(note_on(76), 0.0)
    assert session.tick(0.0) == [DeviceCommand(0.0, ActuatorSite.TIP_RING, 152)]
    assert session.tick(0.1) == []
    session.feed(note_off(76), 0.5)
    assert session.tick(0.5) == [DeviceCommand(0.5, ActuatorSite.TIP_RING, 0)]
    assert session.active_events == ()


def test_provisional_hold_expires(default_profile):
    session = LiveSession(default_profile, hold_s=1.0)
    session.feed(note_on(76), 0.0)
    session.tick(0.0)
    assert session.tick(1.0) == [DeviceCommand(1.0, ActuatorSite.TIP_RING, 0)]


def test_percussion_pulse(default_profile):
    session = LiveSession(default_profile)
    session.feed(note_on(36, 127, channel=9), 0.0)
    assert {(c.site, c.intensity) for c in session.tick(0.0)} == {
        (ActuatorSite.THENAR, 255),
        (ActuatorSite.HYPOTHENAR, 255),
        (ActuatorSite.MCP_CENTER, 255),
    }
    assert {c.intensity for c in session.tick(0.06)} == {0}


def test_overlapping_notes_max_merge(default_profile):
    session = LiveSession(default_profile)
    session.feed(note_on(76, 127), 0.0)
    session.feed(note_on(76, 1), 0.0)
    assert session.tick(0.0) == [DeviceCommand(0.0, ActuatorSite.TIP_RING, 170)]
    session.feed(note_off(76), 0.2)
    assert session.tick(0.2) == [DeviceCommand(0.2, ActuatorSite.TIP_RING, 85)]


def test_orphan_and_unmapped_are_counted(default_profile):
    session = LiveSession(default_profile)
    session.feed(note_off(76), 0.0)
    session.feed(note_on(61), 0.0)
    assert session.tick(0.0) == []
    assert session.diagnostics.count("orphan_note_off") == 1
    assert session.diagnostics.count("unmapped_note") == 1


def test_close_shuts_everything_off(default_profile):
    session = LiveSession(default_profile)
    session.feed(note_on(76), 0.0)
    session.feed(note_on(57, channel=1), 0.0)
    session.tick(0.0)
    commands = session.close(0.3)
    assert {c.intensity for c in commands} == {0}
    assert {c.site for c in commands} == {ActuatorSite.TIP_RING, ActuatorSite.MCP_CENTER}
    assert session.diagnostics.count("unclosed_note") == 2


def test_control_change_level():
    profile = dataclasses.replace(MappingProfile(), controller_map={1: ActuatorSite.THENAR})
    session = LiveSession(profile)
    session.feed(MidiMessage(MessageKind.CONTROL_CHANGE, 0, 1, 127), 0.0)
    assert session.tick(0.0) == [DeviceCommand(0.0, ActuatorSite.THENAR, 255)]
    session.feed(MidiMessage(MessageKind.CONTROL_CHANGE, 0, 1, 0), 0.4)
    assert session.tick(0.4) == [DeviceCommand(0.4, ActuatorSite.THENAR, 0)]
