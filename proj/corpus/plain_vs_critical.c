int x;

void main()
{
#pragma omp parallel
    {
        x = 0;
#pragma omp critical
        { x = x + 1; }
    }
}
