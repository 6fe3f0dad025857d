# Bump this every time there is a change in enumeration or census generation that can affect reported statistics.
# Census journals written by a different version are refused on resume.
ALGO_VERSION = 4
