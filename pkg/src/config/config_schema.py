from typing import Any, Callable, Dict, List, Optional, TypedDict


class ConstructionConfig(TypedDict):
    """Configuration for a single construction."""

    name: str
    description: str
    params: Dict[str, str]
    defaults: Dict[str, Any]
    builder: Callable[..., Any]
    colored: bool
    group_name: str


class ExperimentConfig(TypedDict):
    """A desk-scale experiment: an optional construction plus the check run against it."""

    name: str
    description: str
    construction: Optional[str]
    params: Dict[str, Any]
    check: str
    columns: List[str]
    group_name: str
