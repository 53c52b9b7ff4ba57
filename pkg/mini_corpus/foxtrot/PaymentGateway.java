package foxtrot.pay;

public interface PaymentGateway {

    // todo card validation is incomplete and untested for amex
    default boolean validate(Card card) {
        return card != null && card.number() != null;
    }

    Receipt charge(Card card, long amountCents);
}
