import os
from pathlib import Path
from dotenv import load_dotenv

# Carrega variáveis de ambiente do .env
load_dotenv()

# Diretórios base
BASE_DIR = Path(__file__).resolve().parent.parent.parent
PRESETS_DIR = Path(__file__).resolve().parent.parent / "profiles" / "presets"

# Configurações de logging
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
_log_file = os.getenv("LOG_FILE", str(BASE_DIR / "logs" / "tactile.log"))
LOG_FILE = Path(_log_file) if _log_file else None

# Caminho de busca de perfis (separado por os.pathsep)
PROFILE_SEARCH_PATH = [
    Path(p) for p in os.getenv("TACTILE_PROFILE_PATH", "").split(os.pathsep) if p
]

# Configurações da porta serial (convenção Hairless MIDI: 115200 8N1)
SERIAL_BAUDRATE = int(os.getenv("TACTILE_SERIAL_BAUDRATE", "115200"))
SERIAL_TIMEOUT = 0.05  # segundos

# Configurações de reprodução
LATENESS_ALERT_MS = float(os.getenv("TACTILE_LATENESS_ALERT_MS", "5.0"))
SOURCE_QUEUE_SIZE = int(os.getenv("TACTILE_SOURCE_QUEUE_SIZE", "64"))
SOURCE_CHUNK_SIZE = 256  # bytes por leitura
LIVE_HOLD_S = float(os.getenv("TACTILE_LIVE_HOLD_S", "10.0"))
LIVE_TICK_S = 0.001

# Criação de diretórios necessários
if LOG_FILE is not None:
    LOG_FILE.parent.mkdir(parents=True, exist_ok=True)
