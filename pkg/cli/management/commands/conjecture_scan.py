from cli.management.commands._base import RunCommand


class Command(RunCommand):
    help = "Compare v_c with PPT thresholds for random coefficients failing restriction (ii)"
    command_name = "conjecture_scan"

    def add_arguments(self, parser):
        self.add_system_arguments(parser)
        parser.add_argument("--samples", type=int, default=100, help="Number of random coefficient vectors")
        parser.add_argument("--seed", type=int, default=0, help="Philox key for reproducible sampling")
        self.add_output_arguments(parser, formats=("csv", "json"))
