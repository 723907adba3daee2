import sys

from anyon1d.cli import main

# python run_anyon1d.py boundstate --stats ba --alpha 0.5 --asc 1
# python run_anyon1d.py ho --epsilon 0.5 --alpha 0.5 --kmax 100
# python run_anyon1d.py verify

if __name__ == "__main__":
    sys.exit(main())
