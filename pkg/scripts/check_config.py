#!/usr/bin/env python3
import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from utils.config import Config

def main():
    print("🔧 Checking configuration...")

    try:
        config = Config()

        print("\n📱 App Config:")
        print(f"  - Name: {config.app.get('name', 'N/A')}")
        print(f"  - Report format: {config.app.get('report_format', 'text')}")

        print("\n📝 Logging Config:")
        print(f"  - Level: {config.logging.get('level', 'INFO')}")
        print(f"  - File: {config.logging.get('file', 'logs/opacity.log')}")

        print("\n🔍 Verify Config:")
        print(f"  - Phase clock: {config.verify.get('phase_clock', 'c')}")

        print("\n📊 Oracle Config:")
        print(f"  - Depth: {config.oracle.get('depth', 8)}")
        print(f"  - Seed: {config.oracle.get('seed', 0)}")
        print(f"  - Grid step: {config.oracle.get('grid_step', '1/100')}")

        print("\n✅ Configuration loaded successfully!")

    except Exception as e:
        print(f"❌ Configuration loading failed: {e}")
        return 1
    return 0

if __name__ == "__main__":
    sys.exit(main())
