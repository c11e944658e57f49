import click
from rich.console import Console
from rich.text import Text
from rich.tree import Tree


class RecursiveHelpGroup(click.Group):
    """
    A Click command group that prints every command with its options
    as a Rich tree.
    """

    def format_help(self, ctx: click.Context, formatter: click.HelpFormatter) -> None:
        console = Console()
        console.print("\n[bold blue]gnice: Groebner bases and G-nice pairs of polynomial ideals.")
        print("Usage: gnice [global options] COMMAND [options] SESSION_FILE\n")
        root_tree = Tree("[bold cyan]gnice[/bold cyan]")
        seen: set[int] = set()
        self._build_rich_tree(ctx, group=self, tree=root_tree, seen=seen)

        options_tree = root_tree.add("[bold magenta]Global Options[/bold magenta]")
        for opt in ctx.command.get_params(ctx):
            if isinstance(opt, click.Option):
                options_tree.add(self._option_node(opt, "magenta"))

        console.print(root_tree)

    @staticmethod
    def _option_node(opt: click.Option, style: str) -> Text:
        node = Text(", ".join(opt.opts + opt.secondary_opts), style=style)
        if opt.help:
            node.append(f"  {opt.help}", style="dim")
        return node

    def _build_rich_tree(self, ctx: click.Context, group: click.Group, tree: Tree, seen: set[int]) -> None:
        """
        Recursively build a rich Tree of all commands and their options.
        """
        for name in group.list_commands(ctx):
            cmd = group.get_command(ctx, name)
            if cmd is None or id(cmd) in seen:
                continue
            seen.add(id(cmd))

            style = "bold green" if isinstance(cmd, click.Group) else "bold cyan"
            node_label = Text(name, style=style)
            short_help = cmd.get_short_help_str(limit=60) or ""
            if short_help:
                node_label.append(f": {short_help}", style="dim")

            cmd_branch = tree.add(node_label)
            for opt in cmd.params:
                if isinstance(opt, click.Option):
                    cmd_branch.add(self._option_node(opt, "yellow"))

            if isinstance(cmd, click.Group):
                self._build_rich_tree(ctx, cmd, cmd_branch, seen)
