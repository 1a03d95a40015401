import typer

from adversarial_balancing.cli.commands.balance import balance
from adversarial_balancing.cli.commands.diagnose import diagnose
from adversarial_balancing.cli.commands.generate import generate_cli
from adversarial_balancing.cli.commands.run import run
from adversarial_balancing.shared.logger import set_level

app = typer.Typer(add_completion=False, help="Adversarial balancing weights for causal inference.")
app.add_typer(generate_cli, name="generate")
app.command("balance")(balance)
app.command("diagnose")(diagnose)
app.command("run")(run)


@app.callback()
def configure(log_level: str = typer.Option(None, "--log-level", help="Overrides ADVBAL_LOG_LEVEL")):
    if log_level:
        set_level(log_level)


def main():
    app()
