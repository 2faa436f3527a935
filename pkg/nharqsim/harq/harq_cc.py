"""Chase combining baseline: identical full-power copies, MRC over all of them."""
from typing import List

from ..models import MessageContext, RoundRecord, Scheme
from .type1 import SingleMessageEngine


class HarqCCEngine(SingleMessageEngine):
    scheme = Scheme.HARQ_CC

    def decode_window(self, message: MessageContext) -> List[RoundRecord]:
        return self.window(message)
