from .parser import tokenize, parse, parse_statement
from .evaluator import Session, evaluate, run_statement, kind_of

__all__ = ['tokenize', 'parse', 'parse_statement', 'Session', 'evaluate', 'run_statement', 'kind_of']
