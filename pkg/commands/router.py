# commands/router.py - Declarative sub-command registration on top of argparse
import argparse
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple


@dataclass(frozen=True)
class Option:
    """Arguments forwarded verbatim to ArgumentParser.add_argument."""
    flags: Tuple[str, ...]
    kwargs: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def of(cls, *flags: str, **kwargs) -> "Option":
        return cls(tuple(flags), kwargs)


@dataclass(frozen=True)
class Route:
    name: str
    help: str
    handler: Callable
    options: Tuple[Option, ...]
    group: Optional[str] = None


class CommandRouter:
    """Collects handlers per command the way a web router collects endpoints."""

    def __init__(self, group: Optional[str] = None, group_help: str = ""):
        self.group = group
        self.group_help = group_help
        self.routes: List[Route] = []

    def command(self, name: str, help: str, options: Tuple[Option, ...] = ()):
        def decorator(func: Callable) -> Callable:
            self.routes.append(Route(name, help, func, tuple(options), self.group))
            return func
        return decorator


def include_routers(
    subparsers: argparse._SubParsersAction,
    routers: List[CommandRouter],
    parents: List[argparse.ArgumentParser],
):
    """Adds one sub-parser per route; grouped routes nest under their group command."""
    for router in routers:
        target = subparsers
        if router.group:
            group_parser = subparsers.add_parser(router.group, help=router.group_help, description=router.group_help)
            target = group_parser.add_subparsers(dest="family", metavar="FAMILY", required=True)
        for route in router.routes:
            parser = target.add_parser(route.name, help=route.help, description=route.help, parents=parents)
            for option in route.options:
                parser.add_argument(*option.flags, **option.kwargs)
            qualified = f"{router.group} {route.name}" if router.group else route.name
            parser.set_defaults(handler=route.handler, command_name=qualified)
