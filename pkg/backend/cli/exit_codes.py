# backend/cli/exit_codes.py

"""
EXIT CODES

0  success
1  verification mismatch ("the math disagrees")
2  invalid arguments ("you typed it wrong")
3  internal contradiction (inconsistent facts or wrong spectrum)
"""

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INVALID_ARGUMENTS = 2
EXIT_CONTRADICTION = 3
