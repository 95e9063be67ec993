import json

import pandas as pd

from models import ColoredConstruction, EdgeColoring, Graph

from .graph_codec import graph_to_dict


def _plain(data):
    """JSON-ready form of graphs, colorings, constructions and DataFrames."""
    if isinstance(data, pd.DataFrame):
        return data.to_dict(orient="records")
    if isinstance(data, Graph):
        return graph_to_dict(data)
    if isinstance(data, EdgeColoring):
        return data.to_dict()
    if isinstance(data, ColoredConstruction):
        return data.summary()
    return data


def debug_print(data):
    """Pretty-print graphs, colorings, DataFrames, dicts or lists in full JSON between clear separators."""
    separator_top = ">>>" * 40
    separator_bottom = "<<<" * 40
    print(separator_top)

    data = _plain(data)
    if isinstance(data, (dict, list)):
        print(json.dumps(data, indent=2, default=str))
    else:
        print(str(data))

    print(separator_bottom)
