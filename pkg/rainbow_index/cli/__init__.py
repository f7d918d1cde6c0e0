from .main import CliConfig, build_parser, main, run
