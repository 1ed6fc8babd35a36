import os
import yaml
from pathlib import Path
from dotenv import load_dotenv

ROOT = Path(__file__).parent.parent.parent


class Config:
    def __init__(self, config_dir=None):
        config_dir = Path(config_dir) if config_dir else ROOT / 'config'

        # Load environment variables
        load_dotenv(config_dir / '.env')

        # Load YAML config
        config_path = config_dir / 'config.yaml'
        try:
            with open(config_path, 'r', encoding='utf-8') as f:
                self._config = yaml.safe_load(f) or {}
        except FileNotFoundError:
            print(f"❌ Config file not found: {config_path}")
            raise
        except yaml.YAMLError as e:
            print(f"❌ Error parsing YAML: {e}")
            raise

        for section in ('app', 'logging', 'verify', 'oracle', 'dot'):
            self._config.setdefault(section, {})

        # Override with environment variables
        self._load_env_overrides()

    def _load_env_overrides(self):
        """Load configuration overrides from environment"""
        if os.getenv('OPACITY_LOG_LEVEL'):
            self._config['logging']['level'] = os.getenv('OPACITY_LOG_LEVEL').upper()
        if os.getenv('OPACITY_REPORT_FORMAT'):
            self._config['app']['report_format'] = os.getenv('OPACITY_REPORT_FORMAT').lower()
        if os.getenv('OPACITY_PHASE_CLOCK'):
            self._config['verify']['phase_clock'] = os.getenv('OPACITY_PHASE_CLOCK')

        # Oracle overrides
        if os.getenv('OPACITY_ORACLE_DEPTH'):
            self._config['oracle']['depth'] = int(os.getenv('OPACITY_ORACLE_DEPTH'))
        if os.getenv('OPACITY_ORACLE_SEED'):
            self._config['oracle']['seed'] = int(os.getenv('OPACITY_ORACLE_SEED'))

    @property
    def app(self):
        return self._config['app']

    @property
    def logging(self):
        return self._config['logging']

    @property
    def verify(self):
        return self._config['verify']

    @property
    def oracle(self):
        return self._config['oracle']

    @property
    def dot(self):
        return self._config['dot']
