@Deprecated
class Annotations
{
    @SuppressWarnings("unchecked")
    @interface Meta
    {
        int priority() default 1;
    }

    @Meta(priority = 2)
    void tagged()
    {
    }
}
