import logging
import logging.handlers
from pathlib import Path
import sys

ROOT = Path(__file__).parent.parent.parent


class Utf8StreamHandler(logging.StreamHandler):
    """Stream handler that keeps UTF-8 markers on consoles that can take them.

    Writes to stderr so reports printed on stdout stay machine-readable.
    """
    def __init__(self, stream=None):
        if stream is None:
            stream = sys.stderr
        super().__init__(stream)

    def emit(self, record):
        try:
            msg = self.format(record)
            stream = self.stream
            if hasattr(stream, 'buffer'):
                stream.buffer.write((msg + self.terminator).encode('utf-8'))
                stream.buffer.flush()
            else:
                stream.write(msg + self.terminator)
                stream.flush()
        except (UnicodeEncodeError, AttributeError):
            # Terminal cannot encode the markers, retry with plain text
            try:
                clean_msg = self._clean_unicode(self.format(record))
                self.stream.write(clean_msg + self.terminator)
                self.stream.flush()
            except Exception:
                self.handleError(record)
        except Exception:
            self.handleError(record)

    def _clean_unicode(self, text):
        """Replace emoji and automaton symbols with ASCII tags"""
        emoji_map = {
            '🔍': '[SEARCH]',
            '⏱️': '[TIMER]',
            'ℹ️': '[INFO]',
            '🚀': '[START]',
            '✅': '[OK]',
            '❌': '[ERROR]',
            '⚠️': '[WARNING]',
            '📊': '[DATA]',
            '📉': '[REDUCE]',
            '🛑': '[STOP]',
            '💥': '[CRASH]',
            'δ': 'delta',
            '✓': 'tick',
            'ε': 'eps',
        }

        for emoji, replacement in emoji_map.items():
            text = text.replace(emoji, replacement)
        return text.encode('ascii', 'replace').decode('ascii')


def get_logger(name, settings=None):
    """Get configured logger; an empty name configures the root logger for every module"""
    settings = settings or {}
    logger = logging.getLogger(name)

    if not logger.handlers:
        log_file = ROOT / settings.get('file', 'logs/opacity.log')
        log_file.parent.mkdir(parents=True, exist_ok=True)

        logger.setLevel(getattr(logging, str(settings.get('level', 'INFO')).upper(), logging.INFO))

        formatter = logging.Formatter(
            '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
        )

        file_handler = logging.handlers.RotatingFileHandler(
            log_file,
            maxBytes=settings.get('max_bytes', 10 * 1024 * 1024),  # 10MB
            backupCount=settings.get('backup_count', 5),
            encoding='utf-8'
        )
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

        console_handler = Utf8StreamHandler()
        console_handler.setFormatter(formatter)
        logger.addHandler(console_handler)

    return logger
