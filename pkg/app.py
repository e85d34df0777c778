import signal
import sys

from modules.cli import main


def signal_handler(sig, frame):
    print("\n[System] Interrupted.")
    sys.exit(130)


signal.signal(signal.SIGINT, signal_handler)

if __name__ == "__main__":
    sys.exit(main())
