import argparse
import math
import sys
from pathlib import Path
from queue import Empty
from typing import Dict, List, Optional, Sequence

from rich.console import Console
from rich.markup import escape
from rich.table import Table

from .config.constants import EXIT_DATA, EXIT_OK, EXIT_USAGE, ChannelRole, NoteNameConvention
from .config.settings import LIVE_TICK_S
from .errors import TactileError, TransportError
from .evaluation.consistency import MAX_TOTAL_TRIALS, TABLE1_TARGETS, table1_consistency
from .evaluation.fingerprint import Fingerprint, fingerprint, identify, normalized_distance
from .evaluation.metrics import accuracy_by_group, confusion_from_trials, load_trials, micro_recall, precision_recall
from .evaluation.robustness import degradation_curve
from .evaluation.songs import SONG_TITLES, STUDY_SONGS, render_song
from .mapping.events import HapticEvent
from .mapping.live import LiveSession
from .mapping.percussion import map_percussion
from .mapping.profile import MappingProfile
from .mapping.renderer import map_sustained_note, render_timeline
from .midi.decoder import DecoderState, decode_stream
from .midi.messages import note_name
from .midi.smf import load_smf, merge_tracks
from .midi.tempo import build_tempo_map
from .profiles.loader import load_profile
from .timeline.arbiter import arbitrate, timeline_from_commands
from .timeline.clock import VirtualClock, WallClock
from .timeline.model import DeviceCommand, HapticTimeline
from .timeline.player import playback, shutoff
from .transport.backends.passthrough import RawMidiForwarder
from .transport.factory import create_backend, open_source
from .transport.logfile import read_log, write_log
from .transport.sources import MidiSource, SourceReader
from .utils.diagnostics import Diagnostics
from .utils.logger import get_logger, log_diagnostics, set_verbosity

logger = get_logger(__name__)
console = Console(highlight=False)
err_console = Console(stderr=True, highlight=False)


class TactilePlayer:
    """Coordena o caminho arquivo MIDI → timeline → comandos com um perfil"""

    def __init__(self, profile: Optional[MappingProfile] = None):
        self.profile = profile if profile is not None else MappingProfile()
        self.diagnostics = Diagnostics()

    def render_file(self, midi_path: Path) -> HapticTimeline:
        """
        Renderiza um arquivo .mid.

        Args:
            midi_path: Caminho do SMF

        Returns:
            HapticTimeline: Timeline renderizada com o perfil atual
        """
        doc = load_smf(midi_path)
        self.diagnostics.merge(doc.diagnostics)
        timeline = render_timeline(merge_tracks(doc), build_tempo_map(doc), self.profile, self.diagnostics)
        logger.info(f"{midi_path}: {len(timeline)} eventos, {timeline.duration:.3f}s")
        return timeline

    def commands_for(self, midi_path: Path) -> List[DeviceCommand]:
        return arbitrate(self.render_file(midi_path))

    def fingerprint_file(self, path: Path) -> Fingerprint:
        """Impressão de um log de comandos ou de um .mid (renderizado e arbitrado)."""
        if path.suffix.lower() in {".mid", ".midi"}:
            commands = self.commands_for(path)
        else:
            commands = read_log(path.read_text(encoding="utf-8"))
        return fingerprint(timeline_from_commands(commands))


class _ArgumentParser(argparse.ArgumentParser):
    """ArgumentParser com código de saída 1 para erros de uso"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: erro: {message}\n")


def _bounded_int(lo: int, hi: int):
    """Tipo argparse: inteiro em [lo, hi]; fora disso é erro de uso"""

    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"inteiro inválido: {text!r}") from None
        if not lo <= value <= hi:
            raise argparse.ArgumentTypeError(f"deve estar entre {lo} e {hi}: {value}")
        return value

    return parse


def _parse_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"número inválido: {text!r}") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"número inválido: {text!r}")
    return value


def _positive_float(text: str) -> float:
    value = _parse_float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"deve ser positivo: {text}")
    return value


def _non_negative_float(text: str) -> float:
    value = _parse_float(text)
    if not value >= 0:
        raise argparse.ArgumentTypeError(f"não pode ser negativo: {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    """Monta o parser de argumentos com todos os subcomandos"""
    parser = _ArgumentParser(prog="tactile-player", description="Transforma música MIDI em vibrações na palma da mão")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="Mais detalhes no stderr (-vv para debug)")
    parser.add_argument("-q", "--quiet", action="store_true", help="Só erros no stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    render = sub.add_parser("render", help="Renderiza um .mid num log de comandos")
    render.add_argument("midi", type=Path, help="Arquivo .mid de entrada")
    render.add_argument("--profile", help="Preset ou caminho do perfil")
    render.add_argument("-o", "--output", type=Path, help="Log de saída (padrão: stdout)")

    play = sub.add_parser("play", help="Toca um .mid num backend")
    play.add_argument("midi", type=Path, help="Arquivo .mid de entrada")
    play.add_argument("--profile", help="Preset ou caminho do perfil")
    play.add_argument("--backend", default="null", help="serial:<porta>, log:<caminho> ou null")
    play.add_argument("--virtual-clock", action="store_true", help="Usa relógio virtual (sem esperas reais)")

    listen = sub.add_parser("listen", help="Renderiza um fluxo MIDI ao vivo")
    listen.add_argument("--input", default="stdin", help="serial:<porta> ou stdin")
    listen.add_argument("--backend", default="null", help="serial:<porta>, log:<caminho> ou null")
    listen.add_argument("--profile", help="Preset ou caminho do perfil")
    listen.add_argument("--passthrough", help="serial:<porta> que recebe os bytes MIDI crus")

    inspect = sub.add_parser("inspect-mapping", help="Mostra o gesto produzido por uma nota")
    inspect.add_argument("--profile", help="Preset ou caminho do perfil")
    inspect.add_argument("--note", type=_bounded_int(0, 127), required=True, help="Número da nota MIDI")
    inspect.add_argument(
        "--role",
        choices=[r.value for r in ChannelRole if r is not ChannelRole.IGNORE],
        default=ChannelRole.MELODY.value,
        help="Papel do canal",
    )
    inspect.add_argument("--velocity", type=_bounded_int(1, 127), default=100, help="Velocidade (1-127)")
    inspect.add_argument("--duration", type=_positive_float, default=0.5, help="Duração em segundos")
    inspect.add_argument("--convention", choices=["study", "standard"], default="study", help="Nomes de notas (72=C4 ou 60=C4)")

    ident = sub.add_parser("identify", help="Reconhece a música de um log")
    ident.add_argument("--query", type=Path, required=True, help="Log de comandos consultado")
    ident.add_argument("--candidates", type=Path, required=True, help="Diretório com .log e/ou .mid")
    ident.add_argument("--profile", help="Perfil usado para renderizar candidatos .mid")

    evaluate = sub.add_parser("eval", help="Métricas de reconhecimento a partir dos ensaios")
    evaluate.add_argument("--trials", type=Path, required=True, help="CSV de ensaios")
    evaluate.add_argument("--labels", help="Rótulos declarados, separados por vírgula")
    evaluate.add_argument("--table1-check", type=_bounded_int(0, MAX_TOTAL_TRIALS), metavar="TOTAL", help="Verifica a consistência da tabela publicada")

    robust = sub.add_parser("robustness", help="Curva de auto-identificação sob jitter de ataque")
    robust.add_argument("--profile", default="thompson-study", help="Perfil usado para renderizar as músicas do estudo")
    robust.add_argument(
        "--sigma-ms", type=_non_negative_float, nargs="+", default=[0.0, 10.0, 20.0, 40.0], help="Desvios do jitter (ms)"
    )
    robust.add_argument("--trials", type=_bounded_int(1, 10_000), default=100, help="Cópias ruidosas por música")
    robust.add_argument("--seed", type=int, default=0, help="Semente do gerador")

    return parser


def _fmt(value: Optional[float]) -> str:
    return "—" if value is None else f"{value:.4f}"


def _write_output(text: str, output: Optional[Path]) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        output.write_text(text, encoding="utf-8")


def cmd_render(args) -> int:
    player = TactilePlayer(load_profile(args.profile))
    _write_output(write_log(player.commands_for(args.midi)), args.output)
    log_diagnostics(logger, str(args.midi), player.diagnostics.as_dict())
    return EXIT_OK


def cmd_play(args) -> int:
    player = TactilePlayer(load_profile(args.profile))
    commands = player.commands_for(args.midi)
    clock = VirtualClock() if args.virtual_clock else WallClock()

    with create_backend(args.backend) as backend:
        try:
            report = playback(commands, clock, backend)
        except KeyboardInterrupt:
            shutoff(backend, clock)
            err_console.print("[yellow]Reprodução interrompida[/yellow]")
            return EXIT_OK

    console.print(
        f"{report.emitted} comandos emitidos; atraso máximo {report.max_lateness_s * 1000:.2f} ms; "
        f"{report.late_count} atrasados"
    )
    return EXIT_OK


def cmd_listen(args) -> int:
    profile = load_profile(args.profile)
    session = LiveSession(profile)
    state = DecoderState()
    clock = WallClock()
    port = None
    if args.passthrough:
        kind, _, port = args.passthrough.partition(":")
        if kind != "serial" or not port:
            raise TransportError(f"Passthrough inválido: {args.passthrough!r}")

    forwarder: Optional[RawMidiForwarder] = None
    source: Optional[MidiSource] = None
    reader: Optional[SourceReader] = None
    try:
        if port:
            forwarder = RawMidiForwarder(port)
        source = open_source(args.input)
        reader = SourceReader(source).start()
        with create_backend(args.backend) as backend:
            try:
                try:
                    while True:
                        try:
                            chunk = reader.queue.get(timeout=LIVE_TICK_S)
                        except Empty:
                            chunk = b""
                        if chunk is None:
                            break
                        if chunk and forwarder is not None:
                            forwarder.forward(chunk)
                        messages, state = decode_stream(chunk, state)
                        now = clock.now()
                        for message in messages:
                            session.feed(message, now)
                        for command in session.tick(now):
                            backend.send(command)
                except KeyboardInterrupt:
                    err_console.print("[yellow]Escuta interrompida[/yellow]")
                for command in session.close(clock.now()):
                    backend.send(command)
            except (TactileError, OSError) as e:
                logger.error(f"Escuta abortada, desligando todos os atuadores: {e}")
                shutoff(backend, clock)
                raise
    finally:
        if reader is not None:
            reader.stop()
        if source is not None:
            source.close()
        if forwarder is not None:
            forwarder.close()

    session.diagnostics.merge(state.diagnostics)
    log_diagnostics(logger, args.input, session.diagnostics.as_dict())
    return EXIT_OK


def cmd_inspect(args) -> int:
    profile = load_profile(args.profile)
    role = ChannelRole(args.role)
    convention = NoteNameConvention.STUDY if args.convention == "study" else NoteNameConvention.STANDARD
    diagnostics = Diagnostics()

    if role is ChannelRole.PERCUSSION:
        events: List[HapticEvent] = map_percussion(args.note, args.velocity, 0.0, profile, 0, diagnostics)
    else:
        events = map_sustained_note(role, args.note, args.velocity, 0.0, args.duration, profile, 0, diagnostics)

    console.print(f"{note_name(args.note, convention)} ({args.note}) → {role.value}")
    table = Table(title="Gesto")
    for column in ("t_on (s)", "duração (s)", "atuador", "intensidade"):
        table.add_column(column)
    for event in events:
        table.add_row(f"{event.t_on:.3f}", f"{event.duration:.3f}", event.site.label, str(event.intensity))
    console.print(table)

    sites = list(dict.fromkeys(e.site.label for e in events))
    console.print(" ".join(sites) if sites else "(nenhum atuador)")
    if diagnostics:
        console.print(f"Diagnósticos: {diagnostics.as_dict()}")
    return EXIT_OK


def cmd_identify(args) -> int:
    player = TactilePlayer(load_profile(args.profile))
    query = player.fingerprint_file(args.query)

    paths = sorted(p for p in args.candidates.iterdir() if p.suffix.lower() in {".log", ".mid", ".midi"})
    candidates: Dict[str, Fingerprint] = {p.stem: player.fingerprint_file(p) for p in paths}
    if not candidates:
        raise TactileError(f"Nenhum candidato .log/.mid em {args.candidates}")

    table = Table(title="Candidatos")
    for column in ("rótulo", "título", "distância"):
        table.add_column(column)
    for label, fp in candidates.items():
        table.add_row(label, SONG_TITLES.get(label, ""), f"{normalized_distance(query, fp):.4f}")
    console.print(table)

    label, score = identify(query, candidates)
    console.print(f"{label} {score:.4f}")
    return EXIT_OK


def cmd_eval(args) -> int:
    labels = [label.strip() for label in args.labels.split(",")] if args.labels else None
    trials = load_trials(args.trials, labels)
    matrix = confusion_from_trials(trials, labels)

    table = Table(title=f"{len(trials)} ensaios")
    for column in ("rótulo", "precisão", "revocação"):
        table.add_column(column)
    for label, scores in precision_recall(matrix).items():
        table.add_row(label, _fmt(scores.precision), _fmt(scores.recall))
    console.print(table)
    console.print(f"Revocação micro (acurácia): {_fmt(micro_recall(matrix))}")

    report = accuracy_by_group(trials)
    for group, stats in report.groups.items():
        console.print(f"{group}: acurácia {_fmt(stats.accuracy)}, confiança média {_fmt(stats.mean_confidence)} ({stats.trials} ensaios)")

    if args.table1_check is not None:
        feasible = table1_consistency(TABLE1_TARGETS, args.table1_check)
        console.print(f"Matrizes consistentes com a tabela publicada (total {args.table1_check}): {len(feasible)}")
    return EXIT_OK


def cmd_robustness(args) -> int:
    profile = load_profile(args.profile)
    references = {label: render_song(notes, profile) for label, notes in STUDY_SONGS.items()}
    curve = degradation_curve(references, [sigma / 1000 for sigma in args.sigma_ms], args.trials, args.seed)

    table = Table(title=f"Auto-identificação sob jitter ({args.trials} ensaios por música)")
    for column in ("σ (ms)", *references, "média"):
        table.add_column(column)
    for sigma, accuracy in curve.items():
        mean = sum(accuracy.values()) / len(accuracy)
        table.add_row(f"{sigma * 1000:g}", *(_fmt(accuracy[label]) for label in references), _fmt(mean))
        logger.info(f"Jitter {sigma * 1000:g} ms: {accuracy}")
    console.print(table)
    return EXIT_OK


COMMANDS = {
    "render": cmd_render,
    "play": cmd_play,
    "listen": cmd_listen,
    "inspect-mapping": cmd_inspect,
    "identify": cmd_identify,
    "eval": cmd_eval,
    "robustness": cmd_robustness,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Executa a CLI e devolve o código de saída.

    Returns:
        int: 0 sucesso, 1 erro de uso, 2 erro nos dados
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    set_verbosity(-1 if args.quiet else args.verbose)

    try:
        return COMMANDS[args.command](args)
    except (TactileError, OSError, ValueError) as e:
        logger.error(f"Erro em {args.command}: {e}")
        err_console.print(f"[bold red]Erro:[/bold red] {escape(str(e))}")
        return EXIT_DATA


def main():
    """Função principal da CLI"""
    sys.exit(run())


if __name__ == "__main__":
    main()
