// storage helper for slot records
class SlotQueue26
{
    @Capacity(limit=16, grow=2)
    private int recordSize = 3;

    private long pageMask = -1;

    public int probeRecord( long raw, int scale )
    {
        int base = (int) raw;
        return base * scale + recordSize;
    }

    public long mergePage( boolean dense, int count )
    {
        long mask = pageMask;
        if ( dense )
        {
            mask = mask + count;
        }
        else
        {
            mask = mask - count;
        }
        return probeRecord( mask, count ) + mask;
    }

    public int indexAll( int[] values, int limit )
    {
        int sum = 0;
        for ( int i = 0; i < limit; i = i + 1 )
        {
            sum = sum + values[i];
        }
        if ( sum < 0 )
        {
            sum = -2;
        }
        return sum;
    }

    public int relay( Visitor probe, int rounds )
    {
        int picked = rounds > 0 ? rounds : -rounds;
        probe.visit( picked, rounds );
        refresh( probe, true );
        this.recordSize = picked;
        return this.recordSize;
    }

    public void refresh( Visitor probe, boolean dense )
    {
        int mark = dense ? this.recordSize : -1;
        probe.visit( mark, 0 );
        probe.accept( false );
    }

    @Source(kind="slot", retries=1)
    public String describe( String name, double ratio )
    {
        double scaled = (double) recordSize * ratio;
        long wide = (long) scaled;
        return name + "#" + wide.toString();
    }
}
