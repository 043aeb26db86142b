#!/usr/bin/env python3
"""
Entry point for running hessberg from a source checkout
"""
import sys

if __name__ == "__main__":
    try:
        from hessberg.main import main
    except ImportError as e:
        print(f"Error importing hessberg: {e}", file=sys.stderr)
        sys.exit(1)
    sys.exit(main())
